// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "dsp/fft.hpp"

#include <cmath>
#include <cstdint>

#include "util/error.hpp"

namespace wrnse::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative Cooley-Tukey, n a power of two.
void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  if (n <= 1) return;

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

// Bluestein chirp transform for arbitrary n, expressed as a circular
// convolution at the next power of two >= 2n-1.
void fft_bluestein(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  const size_t m = next_pow2(2 * n - 1);
  const double sign = inverse ? 1.0 : -1.0;

  // chirp[k] = exp(sign * i*pi*k^2/n); k^2 taken mod 2n to keep the
  // angle argument small.
  std::vector<cplx> chirp(n);
  for (size_t k = 0; k < n; ++k) {
    uint64_t k2 = (static_cast<uint64_t>(k) * k) % (2 * n);
    double ang = sign * kPi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<cplx> fa(m, cplx(0.0, 0.0));
  std::vector<cplx> fb(m, cplx(0.0, 0.0));
  for (size_t k = 0; k < n; ++k) fa[k] = a[k] * chirp[k];
  fb[0] = std::conj(chirp[0]);
  for (size_t k = 1; k < n; ++k) fb[k] = fb[m - k] = std::conj(chirp[k]);

  fft_pow2(fa, false);
  fft_pow2(fb, false);
  for (size_t k = 0; k < m; ++k) fa[k] *= fb[k];
  fft_pow2(fa, true);

  for (size_t k = 0; k < n; ++k) a[k] = fa[k] * chirp[k];
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

}  // namespace

void fft(std::vector<cplx>& a, bool inverse) {
  if (a.empty()) return;
  if (is_pow2(a.size())) {
    fft_pow2(a, inverse);
  } else {
    fft_bluestein(a, inverse);
  }
}

std::vector<cplx> fft_real(const double* frame, size_t frame_len, size_t fft_size) {
  if (fft_size == 0) raise(ErrorCode::kInvalid, "fft_real: fft_size must be positive");
  std::vector<cplx> buf(fft_size, cplx(0.0, 0.0));
  for (size_t i = 0; i < frame_len; ++i) {
    buf[i % fft_size] += cplx(frame[i], 0.0);
  }
  fft(buf, false);
  return buf;
}

}  // namespace wrnse::dsp
