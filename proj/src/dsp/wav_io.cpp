// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsp/wav_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "util/error.hpp"

namespace wrnse::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

uint16_t read_u16(const unsigned char* p) { return static_cast<uint16_t>(p[0] | (p[1] << 8)); }

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void write_u16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void write_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct WavData {
  std::vector<double> mono;  // channel-averaged
  int sample_rate = 0;
};

WavData decode_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(wrnse::ErrorCode::kIo, "cannot open '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const size_t n = bytes.size();
  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0) {
    raise(wrnse::ErrorCode::kIo, "'" + path + "' is not a RIFF/WAVE file");
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_off = 0, data_len = 0;
  bool have_fmt = false;

  size_t off = 12;
  while (off + 8 <= n) {
    const char* id = bytes.data() + off;
    uint32_t chunk_len = read_u32(p + off + 4);
    size_t body = off + 8;
    if (body + chunk_len > n) chunk_len = static_cast<uint32_t>(n - body);
    if (std::memcmp(id, "fmt ", 4) == 0 && chunk_len >= 16) {
      format = read_u16(p + body);
      channels = read_u16(p + body + 2);
      rate = read_u32(p + body + 4);
      bits = read_u16(p + body + 14);
      if (format == 0xfffe && chunk_len >= 26) {
        // WAVE_FORMAT_EXTENSIBLE: first two GUID bytes carry the format code
        format = read_u16(p + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_off = body;
      data_len = chunk_len;
    }
    off = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_off == 0) {
    raise(wrnse::ErrorCode::kIo, "'" + path + "': missing fmt/data chunk");
  }
  if (channels == 0 || rate == 0) {
    raise(wrnse::ErrorCode::kIo, "'" + path + "': malformed fmt chunk");
  }

  const bool pcm = format == 1;
  const bool ieee = format == 3;
  size_t bytes_per_sample;
  if (pcm && (bits == 8 || bits == 16 || bits == 24)) {
    bytes_per_sample = bits / 8;
  } else if (ieee && bits == 32) {
    bytes_per_sample = 4;
  } else {
    raise(wrnse::ErrorCode::kIo, "'" + path + "': unsupported codec (format " +
                                     std::to_string(format) + ", " + std::to_string(bits) +
                                     " bits); expected 8/16/24-bit PCM or 32-bit float");
  }

  const size_t frame_bytes = bytes_per_sample * channels;
  const size_t frames = data_len / frame_bytes;
  if (frames == 0) raise(wrnse::ErrorCode::kIo, "'" + path + "': empty audio");

  WavData out;
  out.sample_rate = static_cast<int>(rate);
  out.mono.resize(frames);
  const unsigned char* d = p + data_off;
  for (size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (size_t c = 0; c < channels; ++c) {
      const unsigned char* s = d + f * frame_bytes + c * bytes_per_sample;
      double v = 0.0;
      if (pcm && bits == 8) {
        v = (static_cast<int>(s[0]) - 128) / 128.0;
      } else if (pcm && bits == 16) {
        int16_t i = static_cast<int16_t>(s[0] | (s[1] << 8));
        v = i / 32768.0;
      } else if (pcm && bits == 24) {
        int32_t i = s[0] | (s[1] << 8) | (s[2] << 16);
        if (i & 0x800000) i |= ~0xffffff;  // sign extend
        v = i / 8388608.0;
      } else {
        float fv;
        std::memcpy(&fv, s, 4);
        v = static_cast<double>(fv);
      }
      acc += v;
    }
    out.mono[f] = acc / channels;
  }
  return out;
}

}  // namespace

std::vector<double> resample_sinc(const std::vector<double>& x, int rate_in, int rate_out) {
  if (rate_in <= 0 || rate_out <= 0) {
    raise(wrnse::ErrorCode::kInvalid, "resample: rates must be positive");
  }
  if (rate_in == rate_out) return x;

  const double ratio = static_cast<double>(rate_in) / rate_out;  // input samples per output
  const double cutoff = ratio > 1.0 ? 1.0 / ratio : 1.0;         // anti-alias for downsampling
  const int half = 32;                                           // 64-tap kernel
  const size_t out_len = static_cast<size_t>(
      std::llround(static_cast<double>(x.size()) * rate_out / rate_in));

  std::vector<double> y(out_len, 0.0);
  for (size_t n = 0; n < out_len; ++n) {
    const double center = static_cast<double>(n) * ratio;
    const int64_t k0 = static_cast<int64_t>(std::floor(center)) - half + 1;
    double acc = 0.0;
    for (int64_t k = k0; k < k0 + 2 * half; ++k) {
      if (k < 0 || k >= static_cast<int64_t>(x.size())) continue;
      const double t = static_cast<double>(k) - center;  // |t| < half
      double sinc = cutoff;
      if (t != 0.0) sinc = cutoff * std::sin(kPi * cutoff * t) / (kPi * cutoff * t);
      const double win = 0.5 + 0.5 * std::cos(kPi * t / half);  // Hann
      acc += x[static_cast<size_t>(k)] * sinc * win;
    }
    y[n] = acc;
  }
  return y;
}

Waveform load_waveform(const std::string& path) {
  WavData raw = decode_wav(path);
  Waveform w;
  w.sample_rate = kSampleRate;
  if (raw.sample_rate == kSampleRate) {
    w.samples = std::move(raw.mono);
  } else {
    w.samples = resample_sinc(raw.mono, raw.sample_rate, kSampleRate);
  }
  if (w.samples.empty()) raise(wrnse::ErrorCode::kIo, "'" + path + "': empty audio after resampling");
  for (double s : w.samples) {
    if (!std::isfinite(s)) {
      raise(wrnse::ErrorCode::kNumeric, "'" + path + "': non-finite sample values");
    }
  }
  return w;
}

void save_waveform(const Waveform& w, const std::string& path, bool float32) {
  if (w.samples.empty()) raise(wrnse::ErrorCode::kInvalid, "save_waveform: empty waveform");
  const uint16_t channels = 1;
  const uint16_t bits = float32 ? 32 : 16;
  const uint16_t format = float32 ? 3 : 1;
  const uint32_t byte_rate = static_cast<uint32_t>(w.sample_rate) * channels * bits / 8;
  const uint16_t block_align = channels * bits / 8;
  const uint32_t data_len = static_cast<uint32_t>(w.samples.size()) * block_align;

  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  write_u32(out, 36 + data_len);
  out += "WAVE";
  out += "fmt ";
  write_u32(out, 16);
  write_u16(out, format);
  write_u16(out, channels);
  write_u32(out, static_cast<uint32_t>(w.sample_rate));
  write_u32(out, byte_rate);
  write_u16(out, block_align);
  write_u16(out, bits);
  out += "data";
  write_u32(out, data_len);

  if (float32) {
    for (double s : w.samples) {
      float f = static_cast<float>(s);
      char buf[4];
      std::memcpy(buf, &f, 4);
      out.append(buf, 4);
    }
  } else {
    for (double s : w.samples) {
      double clamped = s < -1.0 ? -1.0 : (s > 1.0 ? 1.0 : s);
      auto v = static_cast<int16_t>(std::llround(clamped * 32767.0));
      write_u16(out, static_cast<uint16_t>(v));
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) raise(wrnse::ErrorCode::kIo, "cannot write '" + path + "'");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) raise(wrnse::ErrorCode::kIo, "short write on '" + path + "'");
}

}  // namespace wrnse::dsp
