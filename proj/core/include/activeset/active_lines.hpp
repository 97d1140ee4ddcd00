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

#ifndef ACTIVESET_ACTIVE_LINES_HPP_
#define ACTIVESET_ACTIVE_LINES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "activeset/line_set.hpp"
#include "activeset/path.hpp"

namespace activeset {

/// How "initial vertex of a nonempty balanced subdiagonal subpath" is read
/// for vertices off the diagonal.
///
/// kExistential: some later vertex W on L_V is reached before the path first
/// rises strictly above L_V. This is the literal reading, and the one under
/// which the active set is uniformly distributed.
///
/// kMaximal: the longest subpath from V staying weakly below L_V must itself
/// be balanced, i.e. the predecessor of the first vertex strictly above L_V
/// lies on L_V. Diagnostic only; it is not uniformly distributed (n >= 3).
///
/// Condition (iii) is the 180-degree mirror of (ii) in both readings.
enum class ActivityReading { kExistential, kMaximal };

std::string_view activity_reading_name(ActivityReading reading);

enum class ActiveCondition { kOnDiagonal, kBelowBalanced, kAboveBalanced };

std::string_view active_condition_name(ActiveCondition condition);

struct ActiveFinding {
  int k = 0;
  Point vertex;
  std::size_t vertex_index = 0;  // position in path.vertices()
  ActiveCondition condition = ActiveCondition::kOnDiagonal;

  friend bool operator==(const ActiveFinding&, const ActiveFinding&) = default;
};

/// The active vertex on x = k, if any. Throws Error{kLineOutOfRange} unless
/// 1 <= k <= n-1, and Error{kInternalAssertion} if two vertices on the line
/// qualify.
std::optional<ActiveFinding> active_vertex(
    const LatticePath& path, int k,
    ActivityReading reading = ActivityReading::kExistential);

std::vector<ActiveFinding> active_findings(
    const LatticePath& path,
    ActivityReading reading = ActivityReading::kExistential);

LineSet active_set(const LatticePath& path,
                   ActivityReading reading = ActivityReading::kExistential);

struct Prop1Verdict {
  bool consistent = false;
  bool delannoy = false;
  bool all_active = false;
  LineSet active;
  std::string detail;  // empty when consistent
};

/// The active set is all of [n-1] exactly when the path is Delannoy.
Prop1Verdict check_prop1(const LatticePath& path,
                         ActivityReading reading = ActivityReading::kExistential);

}  // namespace activeset

#endif  // ACTIVESET_ACTIVE_LINES_HPP_
