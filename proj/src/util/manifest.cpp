// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "util/manifest.hpp"

#include <fstream>

#include "util/error.hpp"

namespace wrnse::util {

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kIo, "cannot open manifest '" + path + "'");
  Manifest m;
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      raise(ErrorCode::kIo, "manifest '" + path + "' line " + std::to_string(lineno) +
                                ": invalid JSON");
    }
    if (!have_header) {
      if (!j.contains("format") || j["format"] != "wrnse-manifest") {
        raise(ErrorCode::kIo, "manifest '" + path + "': missing wrnse-manifest header line");
      }
      m.version = j.value("version", 1);
      if (m.version != 1) {
        raise(ErrorCode::kIo, "manifest '" + path + "': unsupported version " +
                                  std::to_string(m.version));
      }
      m.kind = j.value("kind", "");
      have_header = true;
      continue;
    }
    m.records.push_back(std::move(j));
  }
  if (!have_header) raise(ErrorCode::kIo, "manifest '" + path + "' is empty");
  return m;
}

std::string Manifest::serialize() const {
  nlohmann::json header = {{"format", "wrnse-manifest"}, {"version", version}, {"kind", kind}};
  std::string out = header.dump() + "\n";
  for (const auto& rec : records) out += rec.dump() + "\n";
  return out;
}

void Manifest::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::kIo, "cannot write manifest '" + path + "'");
  out << serialize();
  if (!out) raise(ErrorCode::kIo, "short write on manifest '" + path + "'");
}

}  // namespace wrnse::util
