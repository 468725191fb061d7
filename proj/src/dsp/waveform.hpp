// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

namespace wrnse::dsp {

inline constexpr int kSampleRate = 16000;

// Mono sample sequence. Everything past ingestion runs at 16 kHz.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = kSampleRate;

  size_t size() const { return samples.size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

}  // namespace wrnse::dsp
