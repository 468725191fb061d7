// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "util/crc64.hpp"

#include <array>

namespace wrnse::util {

namespace {

std::array<uint64_t, 256> make_table() {
  std::array<uint64_t, 256> table{};
  const uint64_t poly = 0xc96c5795d7870f42ull;  // reflected ECMA-182
  for (uint64_t i = 0; i < 256; ++i) {
    uint64_t crc = i;
    for (int bit = 0; bit < 8; ++bit) {
      crc = (crc & 1) ? (crc >> 1) ^ poly : crc >> 1;
    }
    table[i] = crc;
  }
  return table;
}

const std::array<uint64_t, 256>& table() {
  static const std::array<uint64_t, 256> t = make_table();
  return t;
}

}  // namespace

uint64_t crc64(const void* data, size_t len, uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  const auto& t = table();
  uint64_t crc = ~seed;
  for (size_t i = 0; i < len; ++i) {
    crc = t[(crc ^ bytes[i]) & 0xff] ^ (crc >> 8);
  }
  return ~crc;
}

}  // namespace wrnse::util
