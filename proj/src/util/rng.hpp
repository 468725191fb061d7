// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace wrnse::util {

// Deterministic pseudo-random generator used for every random decision in
// the toolkit. All distributions are derived from raw 64-bit draws so that
// outputs are identical across platforms and standard-library versions.
//
// Substreams are derived from a name hash, so adding a consumer of one
// stream never perturbs the draws of another.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), state_(splitmix(seed)) {
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
  }

  uint64_t seed() const { return seed_; }

  // Independent stream identified by name, e.g. "init", "batch", "augment".
  Rng substream(std::string_view name) const {
    return Rng(splitmix(seed_ ^ fnv1a(name)));
  }

  // Independent per-task stream, e.g. one per corpus item.
  Rng fork(uint64_t index) const {
    return Rng(splitmix(seed_ ^ splitmix(index + 0x51ed2701)));
  }

  uint64_t next_u64() {
    // xorshift64* step
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

  // Standard normal via Box-Muller; caches the second deviate.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  static uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  static uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  uint64_t seed_;
  uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace wrnse::util
