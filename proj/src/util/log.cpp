// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "util/log.hpp"

#include <atomic>

#include "util/error.hpp"

namespace wrnse::util {

namespace {
std::atomic<int> g_level{static_cast<int>(LogLevel::kWarn)};

const char* tag(LogLevel level) {
  switch (level) {
    case LogLevel::kError: return "error";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kInfo: return "info";
    case LogLevel::kDebug: return "debug";
  }
  return "?";
}
}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(g_level.load()); }

void set_log_level(LogLevel level) { g_level.store(static_cast<int>(level)); }

void set_log_level(const std::string& name) {
  if (name == "error") set_log_level(LogLevel::kError);
  else if (name == "warn") set_log_level(LogLevel::kWarn);
  else if (name == "info") set_log_level(LogLevel::kInfo);
  else if (name == "debug") set_log_level(LogLevel::kDebug);
  else raise(ErrorCode::kConfig, "unknown log level '" + name + "' (expected error|warn|info|debug)");
}

void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > g_level.load()) return;
  std::fprintf(stderr, "[wrnse %s] %s\n", tag(level), msg.c_str());
}

}  // namespace wrnse::util
