// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsp/frontend.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "dsp/fft.hpp"
#include "util/error.hpp"

namespace wrnse::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kMelLogFloor = 1e-10;

double hz_to_mel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }
double mel_to_hz(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }

const MelFilterbank& cached_filterbank(int n_bands) {
  static const MelFilterbank fb32(32, kFftSize, kSampleRate);
  static const MelFilterbank fb50(50, kFftSize, kSampleRate);
  static const MelFilterbank fb100(100, kFftSize, kSampleRate);
  switch (n_bands) {
    case 32: return fb32;
    case 50: return fb50;
    case 100: return fb100;
    default:
      raise(ErrorCode::kInvalid,
            "mel_filterbank: unsupported band count " + std::to_string(n_bands) +
                " (expected 32, 50 or 100)");
  }
}

// Orthonormal DCT-II matrix, cached per size.
const util::Matrix& dct_matrix(size_t n) {
  static util::Matrix m32, m50, m100;
  util::Matrix* slot = nullptr;
  if (n == 32) slot = &m32;
  else if (n == 50) slot = &m50;
  else if (n == 100) slot = &m100;

  auto build = [](size_t size) {
    util::Matrix m(size, size);
    const double s0 = std::sqrt(1.0 / static_cast<double>(size));
    const double sk = std::sqrt(2.0 / static_cast<double>(size));
    for (size_t k = 0; k < size; ++k) {
      for (size_t i = 0; i < size; ++i) {
        double scale = k == 0 ? s0 : sk;
        m.at(k, i) = scale * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * size));
      }
    }
    return m;
  };

  if (slot) {
    if (slot->empty()) *slot = build(n);
    return *slot;
  }
  static util::Matrix scratch;
  scratch = build(n);
  return scratch;
}

}  // namespace

std::vector<double> hamming_periodic(size_t len) {
  std::vector<double> w(len);
  for (size_t n = 0; n < len; ++n) {
    w[n] = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(n) / static_cast<double>(len));
  }
  return w;
}

size_t frame_count(size_t num_samples, size_t window_len, size_t hop_len) {
  if (num_samples < window_len) return 0;
  return (num_samples - window_len) / hop_len + 1;
}

util::Matrix frame_signal(const Waveform& w, const FrameSpec& spec) {
  const size_t len = spec.window_len();
  const size_t hop = spec.hop_len();
  if (hop >= len) raise(ErrorCode::kInvalid, "frame_signal: hop must be shorter than the window");
  if (w.samples.size() < len) {
    raise(ErrorCode::kInvalid, "frame_signal: signal of " + std::to_string(w.samples.size()) +
                                   " samples is shorter than the " + std::to_string(spec.window_ms) +
                                   " ms window; at least " + std::to_string(len) +
                                   " samples are required");
  }
  const size_t frames = frame_count(w.samples.size(), len, hop);
  const std::vector<double> window = hamming_periodic(len);
  util::Matrix out(frames, len);
  for (size_t t = 0; t < frames; ++t) {
    const double* src = w.samples.data() + t * hop;
    double* dst = out.row(t);
    for (size_t n = 0; n < len; ++n) dst[n] = src[n] * window[n];
  }
  return out;
}

std::vector<double> fft_magnitude(const double* frame, size_t frame_len, size_t fft_size) {
  std::vector<cplx> spec = fft_real(frame, frame_len, fft_size);
  std::vector<double> mag(fft_size);
  for (size_t k = 0; k < fft_size; ++k) mag[k] = std::abs(spec[k]);
  return mag;
}

MelFilterbank::MelFilterbank(int n_bands, size_t fft_size, int sample_rate)
    : n_bands_(n_bands), usable_bins_(fft_size / 2 + 1) {
  if (n_bands < 1) raise(ErrorCode::kInvalid, "mel filterbank needs at least one band");
  const double nyquist = sample_rate / 2.0;
  const double mel_max = hz_to_mel(nyquist);
  std::vector<double> edges(n_bands + 2);
  for (int i = 0; i < n_bands + 2; ++i) {
    edges[i] = mel_to_hz(mel_max * static_cast<double>(i) / (n_bands + 1));
  }
  const double bin_hz = static_cast<double>(sample_rate) / static_cast<double>(fft_size);
  bands_.resize(n_bands);
  for (int b = 0; b < n_bands; ++b) {
    const double lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
    size_t first = usable_bins_;
    std::vector<double> weights;
    for (size_t k = 0; k < usable_bins_; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f < mid) w = (f - lo) / (mid - lo);
      else if (f >= mid && f < hi) w = (hi - f) / (hi - mid);
      if (w > 0.0) {
        if (first == usable_bins_) first = k;
        weights.push_back(w);
      } else if (first != usable_bins_) {
        break;  // triangles are contiguous in frequency
      }
    }
    bands_[b] = Band{first == usable_bins_ ? 0 : first, std::move(weights)};
  }
}

std::vector<double> MelFilterbank::apply_log(const double* mag, size_t mag_len) const {
  if (mag_len < usable_bins_) {
    raise(ErrorCode::kInvalid, "mel filterbank: magnitude vector shorter than one-sided spectrum");
  }
  std::vector<double> out(bands_.size());
  for (size_t b = 0; b < bands_.size(); ++b) {
    double acc = 0.0;
    const Band& band = bands_[b];
    for (size_t i = 0; i < band.weights.size(); ++i) {
      const double m = mag[band.first_bin + i];
      acc += band.weights[i] * m * m;
    }
    out[b] = std::log(acc > kMelLogFloor ? acc : kMelLogFloor);
  }
  return out;
}

std::vector<double> MelFilterbank::apply_magnitude(const double* mag, size_t mag_len) const {
  if (mag_len < usable_bins_) {
    raise(ErrorCode::kInvalid, "mel filterbank: magnitude vector shorter than one-sided spectrum");
  }
  std::vector<double> out(bands_.size());
  for (size_t b = 0; b < bands_.size(); ++b) {
    double acc = 0.0;
    const Band& band = bands_[b];
    for (size_t i = 0; i < band.weights.size(); ++i) acc += band.weights[i] * mag[band.first_bin + i];
    out[b] = acc;
  }
  return out;
}

double MelFilterbank::weight_sum(int band) const {
  double acc = 0.0;
  for (double w : bands_[static_cast<size_t>(band)].weights) acc += w;
  return acc;
}

std::vector<double> mel_filterbank(const std::vector<double>& mag, int n_bands) {
  return cached_filterbank(n_bands).apply_log(mag.data(), mag.size());
}

std::vector<double> cepstrum(const std::vector<double>& mel_log) {
  const size_t n = mel_log.size();
  const util::Matrix& dct = dct_matrix(n);
  std::vector<double> out(n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    const double* row = dct.row(k);
    for (size_t i = 0; i < n; ++i) acc += row[i] * mel_log[i];
    out[k] = acc;
  }
  return out;
}

int mel_bands_for_window(int window_ms) {
  switch (window_ms) {
    case 25: return 32;
    case 50: return 50;
    case 75: return 100;
    default:
      raise(ErrorCode::kInvalid, "unsupported analysis window " + std::to_string(window_ms) + " ms");
  }
}

std::vector<ChannelDesc> feature_layout() {
  std::vector<ChannelDesc> layout;
  size_t offset = 0;
  for (int win : {25, 50, 75}) {
    layout.push_back({ChannelSource::kFftMag, win, kFftSize, offset});
    offset += kFftSize;
  }
  for (int win : {25, 50, 75}) {
    const size_t dim = static_cast<size_t>(mel_bands_for_window(win));
    layout.push_back({ChannelSource::kMel, win, dim, offset});
    offset += dim;
  }
  for (int win : {25, 50, 75}) {
    const size_t dim = static_cast<size_t>(mel_bands_for_window(win));
    layout.push_back({ChannelSource::kCepstrum, win, dim, offset});
    offset += dim;
  }
  return layout;
}

void normalize_features(util::Matrix& m, NormStats* stats) {
  const size_t rows = m.rows(), cols = m.cols();
  if (rows == 0) return;
  std::vector<double> mean(cols, 0.0), var(cols, 0.0);
  for (size_t t = 0; t < rows; ++t) {
    const double* row = m.row(t);
    for (size_t c = 0; c < cols; ++c) mean[c] += row[c];
  }
  for (size_t c = 0; c < cols; ++c) mean[c] /= static_cast<double>(rows);
  for (size_t t = 0; t < rows; ++t) {
    const double* row = m.row(t);
    for (size_t c = 0; c < cols; ++c) {
      const double d = row[c] - mean[c];
      var[c] += d * d;
    }
  }
  for (size_t c = 0; c < cols; ++c) var[c] /= static_cast<double>(rows);

  for (size_t c = 0; c < cols; ++c) {
    const double thresh = 1e-24 * std::max(1.0, mean[c] * mean[c]);
    if (var[c] > thresh) {
      const double inv = 1.0 / std::sqrt(var[c]);
      for (size_t t = 0; t < rows; ++t) m.at(t, c) = (m.at(t, c) - mean[c]) * inv;
    } else {
      for (size_t t = 0; t < rows; ++t) m.at(t, c) = 0.0;
    }
  }
  if (stats) {
    stats->mean = std::move(mean);
    stats->var = std::move(var);
  }
}

FeatureBlock extract_features(const Waveform& w) {
  if (w.sample_rate != kSampleRate) {
    raise(ErrorCode::kInvalid, "extract_features: expected 16 kHz input");
  }
  const std::vector<ChannelDesc> layout = feature_layout();

  // Frame per window; the 75 ms window yields the fewest frames.
  size_t frames = SIZE_MAX;
  struct Stream {
    int window_ms;
    util::Matrix windowed;
  };
  std::vector<Stream> streams;
  for (int win : {25, 50, 75}) {
    FrameSpec spec;
    spec.window_ms = win;
    streams.push_back({win, frame_signal(w, spec)});
    frames = std::min(frames, streams.back().windowed.rows());
  }

  FeatureBlock block;
  block.layout = layout;
  block.frames = util::Matrix(frames, kFeatureChannels);

  for (const Stream& stream : streams) {
    const MelFilterbank& fb = cached_filterbank(mel_bands_for_window(stream.window_ms));
    size_t fft_off = 0, mel_off = 0, cep_off = 0;
    for (const ChannelDesc& d : layout) {
      if (d.window_ms != stream.window_ms) continue;
      if (d.source == ChannelSource::kFftMag) fft_off = d.offset;
      else if (d.source == ChannelSource::kMel) mel_off = d.offset;
      else cep_off = d.offset;
    }
    const size_t win_len = stream.windowed.cols();
    for (size_t t = 0; t < frames; ++t) {
      const std::vector<double> mag = fft_magnitude(stream.windowed.row(t), win_len, kFftSize);
      const std::vector<double> mel = fb.apply_log(mag.data(), mag.size());
      const std::vector<double> cep = cepstrum(mel);
      double* row = block.frames.row(t);
      std::memcpy(row + fft_off, mag.data(), mag.size() * sizeof(double));
      std::memcpy(row + mel_off, mel.data(), mel.size() * sizeof(double));
      std::memcpy(row + cep_off, cep.data(), cep.size() * sizeof(double));
    }
  }

  normalize_features(block.frames, &block.norm_stats);
  return block;
}

util::Matrix fft_magnitude_frames(const Waveform& w) {
  FrameSpec spec;
  const util::Matrix frames = frame_signal(w, spec);
  util::Matrix out(frames.rows(), kFftSize);
  for (size_t t = 0; t < frames.rows(); ++t) {
    const std::vector<double> mag = fft_magnitude(frames.row(t), frames.cols(), kFftSize);
    std::memcpy(out.row(t), mag.data(), mag.size() * sizeof(double));
  }
  return out;
}

util::Matrix log_fft_frames(const Waveform& w, double log_floor) {
  util::Matrix mag = fft_magnitude_frames(w);
  for (double& v : mag.data()) v = std::log(v > log_floor ? v : log_floor);
  return mag;
}

namespace {
constexpr char kFeatureMagic[8] = {'W', 'R', 'N', 'S', 'E', 'F', 'E', 'A'};
constexpr uint32_t kFeatureVersion = 1;
}  // namespace

void save_feature_block(const FeatureBlock& block, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::kIo, "cannot write feature file '" + path + "'");
  auto put = [&out](const void* p, size_t n) { out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n)); };
  put(kFeatureMagic, sizeof(kFeatureMagic));
  put(&kFeatureVersion, 4);
  uint64_t t = block.frames.rows(), c = block.frames.cols();
  put(&t, 8);
  put(&c, 8);
  uint32_t ndesc = static_cast<uint32_t>(block.layout.size());
  put(&ndesc, 4);
  for (const ChannelDesc& d : block.layout) {
    uint32_t src = static_cast<uint32_t>(d.source), win = static_cast<uint32_t>(d.window_ms);
    uint64_t dim = d.dim, off = d.offset;
    put(&src, 4);
    put(&win, 4);
    put(&dim, 8);
    put(&off, 8);
  }
  put(block.frames.data().data(), block.frames.data().size() * sizeof(double));
  if (!out) raise(ErrorCode::kIo, "short write on feature file '" + path + "'");
}

FeatureBlock load_feature_block(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::kIo, "cannot open feature file '" + path + "'");
  auto get = [&in, &path](void* p, size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in) raise(ErrorCode::kIo, "truncated feature file '" + path + "'");
  };
  char magic[8];
  get(magic, 8);
  if (std::memcmp(magic, kFeatureMagic, 8) != 0) {
    raise(ErrorCode::kIo, "'" + path + "' is not a wrnse feature file");
  }
  uint32_t version = 0;
  get(&version, 4);
  if (version != kFeatureVersion) {
    raise(ErrorCode::kIo, "feature file '" + path + "': unsupported version");
  }
  uint64_t t = 0, c = 0;
  get(&t, 8);
  get(&c, 8);
  uint32_t ndesc = 0;
  get(&ndesc, 4);
  FeatureBlock block;
  for (uint32_t i = 0; i < ndesc; ++i) {
    uint32_t src = 0, win = 0;
    uint64_t dim = 0, off = 0;
    get(&src, 4);
    get(&win, 4);
    get(&dim, 8);
    get(&off, 8);
    block.layout.push_back({static_cast<ChannelSource>(src), static_cast<int>(win), dim, off});
  }
  block.frames = util::Matrix(t, c);
  get(block.frames.data().data(), block.frames.data().size() * sizeof(double));
  return block;
}

}  // namespace wrnse::dsp
