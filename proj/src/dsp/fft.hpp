// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <vector>

namespace wrnse::dsp {

using cplx = std::complex<double>;

// In-place DFT of arbitrary length (iterative radix-2 for powers of two,
// Bluestein otherwise). Forward is unscaled, inverse carries the 1/N factor.
void fft(std::vector<cplx>& a, bool inverse = false);

// DFT of a real frame. The frame is zero-padded to fft_size when shorter
// and time-aliased (folded modulo fft_size) when longer.
std::vector<cplx> fft_real(const double* frame, size_t frame_len, size_t fft_size);

}  // namespace wrnse::dsp
