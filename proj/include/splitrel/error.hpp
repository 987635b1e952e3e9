// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace splitrel {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kPrecondition = 3,
  kLimitExceeded = 4,
  kUnsupported = 5,
};

// All library failures surface as this exception; the C API maps `code()`
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splitrel
