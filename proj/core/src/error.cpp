// Copyright 2026 The activeset Authors
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

#include "activeset/error.hpp"

namespace activeset {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidStep: return "InvalidStep";
    case ErrorCode::kUnbalancedPath: return "UnbalancedPath";
    case ErrorCode::kLineOutOfRange: return "LineOutOfRange";
    case ErrorCode::kNotSubdiagonal: return "NotSubdiagonal";
    case ErrorCode::kLineNotActive: return "LineNotActive";
    case ErrorCode::kLineNotInactive: return "LineNotInactive";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace activeset
