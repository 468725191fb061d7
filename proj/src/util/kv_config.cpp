// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "util/kv_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "util/error.hpp"

namespace wrnse::util {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') {
    raise(ErrorCode::kConfig, "config key '" + key + "': '" + v + "' is not a number");
  }
  return d;
}

int64_t parse_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  long long i = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0') {
    raise(ErrorCode::kConfig, "config key '" + key + "': '" + v + "' is not an integer");
  }
  return static_cast<int64_t>(i);
}

}  // namespace

KvConfig KvConfig::parse(const std::string& text) {
  KvConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      raise(ErrorCode::kConfig,
            "config line " + std::to_string(lineno) + ": expected 'key = value', got '" + line + "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      raise(ErrorCode::kConfig, "config line " + std::to_string(lineno) + ": empty key");
    }
    cfg.values_[key] = value;
  }
  return cfg;
}

KvConfig KvConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string KvConfig::serialize() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    out += k;
    out += " = ";
    out += v;
    out += "\n";
  }
  return out;
}

void KvConfig::set_double(const std::string& key, double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  values_[key] = os.str();
}

void KvConfig::set_int(const std::string& key, int64_t v) { values_[key] = std::to_string(v); }

void KvConfig::set_bool(const std::string& key, bool v) { values_[key] = v ? "true" : "false"; }

std::string KvConfig::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) raise(ErrorCode::kConfig, "missing config key '" + key + "'");
  return it->second;
}

std::string KvConfig::get_string_or(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KvConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double KvConfig::get_double_or(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_double(key, it->second);
}

int64_t KvConfig::get_int(const std::string& key) const { return parse_int(key, get_string(key)); }

int64_t KvConfig::get_int_or(const std::string& key, int64_t fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_int(key, it->second);
}

bool KvConfig::get_bool_or(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  raise(ErrorCode::kConfig, "config key '" + key + "': '" + v + "' is not a boolean (expected true|false)");
}

std::vector<int64_t> KvConfig::get_int_list_or(const std::string& key,
                                               const std::vector<int64_t>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<int64_t> out;
  for (const auto& item : split_commas(it->second)) out.push_back(parse_int(key, item));
  return out;
}

std::vector<double> KvConfig::get_double_list_or(const std::string& key,
                                                 const std::vector<double>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  for (const auto& item : split_commas(it->second)) out.push_back(parse_double(key, item));
  return out;
}

double KvConfig::require_double_in(const std::string& key, double lo, double hi) const {
  double v = get_double(key);
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << "config key '" << key << "' = " << v << " out of range (expected [" << lo << ", " << hi << "])";
    raise(ErrorCode::kConfig, os.str());
  }
  return v;
}

int64_t KvConfig::require_int_in(const std::string& key, int64_t lo, int64_t hi) const {
  int64_t v = get_int(key);
  if (v < lo || v > hi) {
    raise(ErrorCode::kConfig, "config key '" + key + "' = " + std::to_string(v) +
                                  " out of range (expected [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "])");
  }
  return v;
}

}  // namespace wrnse::util
