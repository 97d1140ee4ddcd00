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

#ifndef ACTIVESET_ERROR_HPP_
#define ACTIVESET_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace activeset {

enum class ErrorCode {
  kInvalidStep,
  kUnbalancedPath,
  kLineOutOfRange,
  kNotSubdiagonal,
  kLineNotActive,
  kLineNotInactive,
  kInvalidInput,
  kBudgetExceeded,
  // A claimed structural property failed at runtime. Never expected on
  // valid input; carries enough context to reproduce.
  kInternalAssertion,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace activeset

#endif  // ACTIVESET_ERROR_HPP_
