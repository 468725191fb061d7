// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "dsp/waveform.hpp"
#include "util/matrix.hpp"

namespace wrnse::dsp {

inline constexpr size_t kFftSize = 512;
inline constexpr int kHopMs = 10;

// Analysis frame geometry on the shared 10 ms grid.
struct FrameSpec {
  int window_ms = 25;  // one of 25, 50, 75
  int hop_ms = kHopMs;
  size_t fft_size = kFftSize;

  size_t window_len() const { return static_cast<size_t>(window_ms) * kSampleRate / 1000; }
  size_t hop_len() const { return static_cast<size_t>(hop_ms) * kSampleRate / 1000; }
};

// 0.54 - 0.46 cos(2 pi n / L), n = 0..L-1.
std::vector<double> hamming_periodic(size_t len);

// floor((N - L)/H) + 1
size_t frame_count(size_t num_samples, size_t window_len, size_t hop_len);

// Frames the signal on the 10 ms grid and applies the Hamming window.
// Raises when the signal is shorter than one window, naming the minimum.
util::Matrix frame_signal(const Waveform& w, const FrameSpec& spec);

// Magnitude of the fft_size-point DFT; longer frames are folded modulo
// fft_size, shorter ones zero-padded. All fft_size bins are returned.
std::vector<double> fft_magnitude(const double* frame, size_t frame_len, size_t fft_size = kFftSize);

// Triangular mel filters spanning 0 Hz .. sample_rate/2, applied to the
// squared magnitude of the one-sided bins 0..fft_size/2.
class MelFilterbank {
 public:
  MelFilterbank(int n_bands, size_t fft_size, int sample_rate);

  int n_bands() const { return n_bands_; }

  // log(max(band energy, 1e-10)) over squared magnitudes.
  std::vector<double> apply_log(const double* mag, size_t mag_len) const;
  // Linear combination of magnitudes (no squaring, no log); used by the
  // frequency-weighted SNR metric.
  std::vector<double> apply_magnitude(const double* mag, size_t mag_len) const;

  double weight_sum(int band) const;

 private:
  struct Band {
    size_t first_bin;
    std::vector<double> weights;
  };
  int n_bands_;
  size_t usable_bins_;
  std::vector<Band> bands_;
};

// 32-, 50- or 100-band variant used by the front-end (other sizes are
// rejected); returns log band energies.
std::vector<double> mel_filterbank(const std::vector<double>& mag, int n_bands);

// Orthonormal type-II DCT.
std::vector<double> cepstrum(const std::vector<double>& mel_log);

enum class ChannelSource { kFftMag = 0, kMel = 1, kCepstrum = 2 };

struct ChannelDesc {
  ChannelSource source;
  int window_ms;
  size_t dim;
  size_t offset;
};

struct NormStats {
  std::vector<double> mean;
  std::vector<double> var;
};

// Per-utterance feature matrix: T frames x C stacked channels.
struct FeatureBlock {
  util::Matrix frames;
  std::vector<ChannelDesc> layout;
  NormStats norm_stats;

  size_t num_frames() const { return frames.rows(); }
  size_t num_channels() const { return frames.cols(); }
};

// Stacked channel count: 3 x 512 FFT magnitudes + (32+50+100) mel +
// (32+50+100) cepstra.
inline constexpr size_t kFeatureChannels = 3 * kFftSize + 2 * (32 + 50 + 100);

// The canonical channel layout (source-major: all FFT streams, then mel,
// then cepstra; 25/50/75 ms within each group).
std::vector<ChannelDesc> feature_layout();

// Mel band count paired with each analysis window.
int mel_bands_for_window(int window_ms);

// Full front-end: per-window FFT/mel/cepstrum stacks on the common frame
// grid (frame count set by the 75 ms window), then per-utterance,
// per-channel mean/variance normalization.
FeatureBlock extract_features(const Waveform& w);

// In-place per-channel normalization; zero-variance channels are set to 0.
void normalize_features(util::Matrix& m, NormStats* stats);

// Raw (unnormalized) magnitude frames of the 25 ms analysis, T x 512.
util::Matrix fft_magnitude_frames(const Waveform& w);
// log(max(magnitude, floor)) of the 25 ms analysis, T x 512.
util::Matrix log_fft_frames(const Waveform& w, double log_floor = 1e-8);

// Binary per-utterance feature record: (T, C, layout, row-major float64).
void save_feature_block(const FeatureBlock& block, const std::string& path);
FeatureBlock load_feature_block(const std::string& path);

}  // namespace wrnse::dsp
