// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wrnse::util {

// Line-delimited JSON manifest with a versioned header line:
//   {"format":"wrnse-manifest","version":1,"kind":"<kind>"}
//   {...record...}
//   ...
// Kinds in use: "corpus" (clean inputs), "augment" (corruption provenance),
// "eval" (reference/test pairs).
struct Manifest {
  std::string kind;
  int version = 1;
  std::vector<nlohmann::json> records;

  static Manifest load(const std::string& path);
  void save(const std::string& path) const;
  std::string serialize() const;
};

}  // namespace wrnse::util
