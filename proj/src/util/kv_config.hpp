// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wrnse::util {

// Canonical "key = value" text, one pair per line, '#' starts a comment.
// Serialization emits keys in sorted order so the output is a stable
// function of the contents.
class KvConfig {
 public:
  KvConfig() = default;

  static KvConfig parse(const std::string& text);
  static KvConfig load(const std::string& path);

  std::string serialize() const;

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set_double(const std::string& key, double v);
  void set_int(const std::string& key, int64_t v);
  void set_bool(const std::string& key, bool v);

  // Typed getters. The *_or forms return the fallback when the key is
  // absent; the required forms raise a config error naming the key.
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  int64_t get_int(const std::string& key) const;
  int64_t get_int_or(const std::string& key, int64_t fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;
  std::vector<int64_t> get_int_list_or(const std::string& key,
                                       const std::vector<int64_t>& fallback) const;
  std::vector<double> get_double_list_or(const std::string& key,
                                         const std::vector<double>& fallback) const;

  // Range checks that raise config errors like
  //   "train.lr = -1 out of range (expected > 0)".
  double require_double_in(const std::string& key, double lo, double hi) const;
  int64_t require_int_in(const std::string& key, int64_t lo, int64_t hi) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace wrnse::util
