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

#include "activeset/active_lines.hpp"

#include "activeset/error.hpp"

namespace activeset {

std::string_view activity_reading_name(ActivityReading reading) {
  return reading == ActivityReading::kExistential ? "existential" : "maximal";
}

std::string_view active_condition_name(ActiveCondition condition) {
  switch (condition) {
    case ActiveCondition::kOnDiagonal: return "on_diagonal";
    case ActiveCondition::kBelowBalanced: return "below_balanced";
    case ActiveCondition::kAboveBalanced: return "above_balanced";
  }
  return "unknown";
}

namespace {

// Vertex i is strictly below y = x. Walk forward while the path stays weakly
// below L_V; the walk always ends because (n,n) lies strictly above L_V.
bool starts_balanced_below(const std::vector<Point>& v, std::size_t i,
                           ActivityReading reading) {
  const int level = diag_level(v[i]);
  std::size_t j = i + 1;
  bool returned = false;
  while (diag_level(v[j]) <= level) {
    returned = returned || diag_level(v[j]) == level;
    ++j;
  }
  if (reading == ActivityReading::kExistential) return returned;
  return j - 1 != i && diag_level(v[j - 1]) == level;
}

// Mirror image: vertex i strictly above y = x, walking backwards.
bool ends_balanced_above(const std::vector<Point>& v, std::size_t i,
                         ActivityReading reading) {
  const int level = diag_level(v[i]);
  std::size_t j = i - 1;
  bool returned = false;
  while (diag_level(v[j]) >= level) {
    returned = returned || diag_level(v[j]) == level;
    --j;
  }
  if (reading == ActivityReading::kExistential) return returned;
  return j + 1 != i && diag_level(v[j + 1]) == level;
}

std::optional<ActiveFinding> scan_line(const LatticePath& path,
                                       const std::vector<Point>& v, int k,
                                       ActivityReading reading) {
  std::optional<ActiveFinding> found;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].x != k) continue;
    const int level = diag_level(v[i]);
    std::optional<ActiveCondition> condition;
    if (level == 0) {
      condition = ActiveCondition::kOnDiagonal;
    } else if (level < 0 && starts_balanced_below(v, i, reading)) {
      condition = ActiveCondition::kBelowBalanced;
    } else if (level > 0 && ends_balanced_above(v, i, reading)) {
      condition = ActiveCondition::kAboveBalanced;
    }
    if (!condition) continue;
    if (found) {
      throw Error(ErrorCode::kInternalAssertion,
                  "two active vertices on x=" + std::to_string(k) + " of '" +
                      format_path(path) + "'");
    }
    found = ActiveFinding{k, v[i], i, *condition};
  }
  return found;
}

}  // namespace

std::optional<ActiveFinding> active_vertex(const LatticePath& path, int k,
                                           ActivityReading reading) {
  const int n = path.order();
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::kLineOutOfRange,
                "line " + std::to_string(k) + " is not in [1, " +
                    std::to_string(n - 1) + "]");
  }
  return scan_line(path, path.vertices(), k, reading);
}

std::vector<ActiveFinding> active_findings(const LatticePath& path,
                                           ActivityReading reading) {
  const auto v = path.vertices();
  std::vector<ActiveFinding> out;
  for (int k = 1; k < path.order(); ++k) {
    if (auto f = scan_line(path, v, k, reading)) out.push_back(*f);
  }
  return out;
}

LineSet active_set(const LatticePath& path, ActivityReading reading) {
  LineSet s(path.order());
  for (const auto& f : active_findings(path, reading)) s.insert(f.k);
  return s;
}

Prop1Verdict check_prop1(const LatticePath& path, ActivityReading reading) {
  Prop1Verdict verdict{.active = active_set(path, reading), .detail = {}};
  verdict.delannoy = path_class_membership(path).delannoy;
  verdict.all_active = verdict.active == LineSet::full(path.order());
  verdict.consistent = verdict.all_active == verdict.delannoy;
  if (!verdict.consistent) {
    verdict.detail = verdict.delannoy
                         ? "Delannoy path with inactive lines; active set {" +
                               verdict.active.to_string() + "}"
                         : "non-Delannoy path with every interior line active";
  }
  return verdict;
}

}  // namespace activeset
