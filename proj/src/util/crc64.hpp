// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>

namespace wrnse::util {

// CRC-64/XZ (ECMA-182 polynomial, reflected, init/xorout all-ones).
uint64_t crc64(const void* data, size_t len, uint64_t seed = 0);

}  // namespace wrnse::util
