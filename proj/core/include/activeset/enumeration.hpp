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

#ifndef ACTIVESET_ENUMERATION_HPP_
#define ACTIVESET_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "activeset/active_lines.hpp"
#include "activeset/line_set.hpp"
#include "activeset/path.hpp"

namespace activeset {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Depth-first generator over a path class. Steps are tried in
/// lexicographic (dx, dy) order, so paths come out in lexicographic step
/// order. Subdiagonality is enforced while descending.
class PathEnumerator {
 public:
  PathEnumerator(int n, PathClass cls);
  /// Only the paths whose first step is `first_step` (one shard).
  PathEnumerator(int n, PathClass cls, Step first_step);

  std::optional<LatticePath> next();

 private:
  bool allowed(Point at, Step s) const noexcept;
  std::optional<Step> first_allowed(Point at, Step from) const noexcept;
  void descend();

  int n_;
  PathClass cls_;
  std::size_t floor_ = 0;  // stack depth that must never be popped
  bool started_ = false;
  bool done_ = false;
  std::vector<Step> steps_;
  std::vector<Point> at_;  // at_[i] = position before steps_[i]
};

/// Shard keys: the admissible first steps, in enumeration order.
std::vector<Step> first_steps(int n, PathClass cls);

void for_each_path(int n, PathClass cls,
                   const std::function<void(const LatticePath&)>& visit);

/// Exact |class at order n| by dynamic programming over (x, y) states.
BigCount count_paths(int n, PathClass cls);

struct CountTable {
  PathClass cls = PathClass::kGeneral;
  std::map<int, BigCount> values;

  static CountTable compute(PathClass cls, int max_n);
};

/// Active-set distribution. counts[mask] counts paths whose active set has
/// LineSet::mask() == mask; all 2^(n-1) subsets are present.
struct Histogram {
  int n = 0;
  PathClass cls = PathClass::kGeneral;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  std::uint64_t count(const LineSet& set) const;
  /// True when every subset has the same count.
  bool uniform() const noexcept;
};

/// Throws Error{kBudgetExceeded} if the class has more than `budget` paths.
Histogram histogram_active_sets(
    int n, PathClass cls,
    ActivityReading reading = ActivityReading::kExistential,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// Throws Error{kBudgetExceeded} unless count_paths(n, cls) <= budget.
void require_within_budget(int n, PathClass cls, std::uint64_t budget);

}  // namespace activeset

#endif  // ACTIVESET_ENUMERATION_HPP_
