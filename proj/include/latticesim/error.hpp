// Copyright 2026 The latticesim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace latticesim {

/// Stable machine-readable failure codes surfaced by the public API.
enum class ErrorCode {
  NON_HERMITIAN,
  BAD_DIM,
  TOO_LARGE,
  BAD_SITES,
  UNSUPPORTED_ORDER,
  PHASE_SOLVER_FAILED,
  INFEASIBLE,
  BAD_SPLIT,
  NOT_LOWERED,
  BAD_ARGS,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NON_HERMITIAN: return "NON_HERMITIAN";
    case ErrorCode::BAD_DIM: return "BAD_DIM";
    case ErrorCode::TOO_LARGE: return "TOO_LARGE";
    case ErrorCode::BAD_SITES: return "BAD_SITES";
    case ErrorCode::UNSUPPORTED_ORDER: return "UNSUPPORTED_ORDER";
    case ErrorCode::PHASE_SOLVER_FAILED: return "PHASE_SOLVER_FAILED";
    case ErrorCode::INFEASIBLE: return "INFEASIBLE";
    case ErrorCode::BAD_SPLIT: return "BAD_SPLIT";
    case ErrorCode::NOT_LOWERED: return "NOT_LOWERED";
    case ErrorCode::BAD_ARGS: return "BAD_ARGS";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latticesim
