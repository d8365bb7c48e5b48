// Copyright 2026 The lcmlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCMLAT_ERROR_HPP_
#define LCMLAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lcmlat {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDimensionMismatch,
  kSizeLimit,
  kPrecondition,
  kInfeasible,
  kIo,
  kInternal,
};

/// Stable machine-readable name ("size-limit", "parse", ...).
const char* to_string(ErrorCode code);

/// All library failures are reported through this one exception type; the
/// code is what the C API and the CLI surface to callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcmlat

#endif  // LCMLAT_ERROR_HPP_
