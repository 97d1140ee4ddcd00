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

#ifndef ACTIVESET_CERTIFICATION_HPP_
#define ACTIVESET_CERTIFICATION_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "activeset/active_lines.hpp"
#include "activeset/enumeration.hpp"
#include "activeset/path.hpp"

namespace activeset {

enum class CheckKind {
  kUniformity,
  kBijection,
  kCommutativity,
  kProp1,
  kCounting,
  kCaseTable,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check(std::string_view name);
std::vector<CheckKind> all_checks();

enum class CheckStatus { kPass, kFail };

inline constexpr std::size_t kMaxWitnesses = 10;

/// A failing (path, line) pair. `path` is in the text format and `line` is 0
/// for failures that are not tied to a single line.
struct Witness {
  std::string path;
  int line = 0;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  CheckKind kind = CheckKind::kUniformity;
  CheckStatus status = CheckStatus::kPass;
  std::vector<Witness> witnesses;  // at most kMaxWitnesses
  std::uint64_t failures = 0;      // including those beyond the cap
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
};

struct CertificationReport {
  int n = 0;
  PathClass cls = PathClass::kGeneral;
  ActivityReading reading = ActivityReading::kExistential;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds wall_time{0};

  bool passed() const noexcept;
  const CheckResult* find(CheckKind kind) const noexcept;
};

struct CertifyOptions {
  std::vector<CheckKind> checks;  // empty selects all_checks()
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  ActivityReading reading = ActivityReading::kExistential;
  // Uniformity also tabulates the histogram under the other reading.
  bool record_alternative_reading = false;
};

/// Exhaustively checks the requested claims over the class at order n.
/// `cls` must be kGeneral or kSubdiagonal. Throws Error{kInvalidInput} for
/// n < 1 or another class, Error{kBudgetExceeded} when the class is larger
/// than the budget (a counting-only run skips enumeration instead).
CertificationReport certify(int n, PathClass cls,
                            const CertifyOptions& options = {});

/// Re-runs one check on the witness's path alone. Returns the failure
/// details it triggers on witness.line (all lines when line is 0).
std::vector<std::string> replay_witness(CheckKind kind, const Witness& witness,
                                        PathClass cls,
                                        ActivityReading reading);

/// Keys in a fixed order. The serialized report is identical across runs
/// and job counts once timing is excluded.
nlohmann::ordered_json report_to_json(const CertificationReport& report,
                                      bool include_timing = true);

}  // namespace activeset

#endif  // ACTIVESET_CERTIFICATION_HPP_
