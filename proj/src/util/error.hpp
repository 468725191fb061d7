// Copyright 2026 the wrnse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wrnse {

// Error categories; these map 1:1 onto the C API status codes and the
// CLI exit codes.
enum class ErrorCode {
  kInvalid = 1,  // bad arguments, precondition violations
  kConfig = 2,   // malformed or out-of-range configuration
  kIo = 3,       // file system, decode/encode failures
  kNumeric = 4,  // non-finite values, degenerate numerics
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace wrnse
