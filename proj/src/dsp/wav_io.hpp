// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "dsp/waveform.hpp"

namespace wrnse::dsp {

// Reads a RIFF/WAVE file (8/16/24-bit integer PCM or 32-bit float),
// averages channels to mono and resamples to 16 kHz.
Waveform load_waveform(const std::string& path);

// Writes 16-bit PCM (default) or 32-bit float WAV at the waveform's rate.
void save_waveform(const Waveform& w, const std::string& path, bool float32 = false);

// Windowed-sinc resampling (64-tap Hann-windowed kernel).
std::vector<double> resample_sinc(const std::vector<double>& x, int rate_in, int rate_out);

}  // namespace wrnse::dsp
