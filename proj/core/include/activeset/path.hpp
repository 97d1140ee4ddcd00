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

#ifndef ACTIVESET_PATH_HPP_
#define ACTIVESET_PATH_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace activeset {

/// A lattice step (dx, dy) with nonnegative components, never (0, 0).
struct Step {
  int dx = 0;
  int dy = 0;

  friend constexpr auto operator<=>(const Step&, const Step&) = default;
};

struct Point {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Position relative to the slope-1 line through the origin: y - x.
/// Two points lie on a common slope-1 line iff their levels agree.
constexpr int diag_level(Point v) noexcept { return v.y - v.x; }

enum class SlopeClass { kLessThanOne, kGeqOne };

/// Classifies the slope of segment a -> p by exact integer comparison.
/// Vertical segments and the degenerate a == p classify as kGeqOne.
constexpr SlopeClass slope_class(Point a, Point p) noexcept {
  return (p.y - a.y) < (p.x - a.x) ? SlopeClass::kLessThanOne
                                   : SlopeClass::kGeqOne;
}

enum class PathClass { kGeneral, kSubdiagonal, kDelannoy, kSubDelannoy };

std::string_view path_class_name(PathClass cls);
std::optional<PathClass> parse_path_class(std::string_view name);

/// The Delannoy-restricted class with the same diagonal constraint.
PathClass delannoy_variant(PathClass cls) noexcept;

/// Immutable path from (0,0) to (n,n). Equality is step-sequence equality.
class LatticePath {
 public:
  /// Throws Error{kInvalidStep} for zero or negative steps,
  /// Error{kUnbalancedPath} if the endpoint is off the diagonal and
  /// Error{kInvalidInput} for an empty step list.
  static LatticePath from_steps(std::vector<Step> steps);

  /// Builds a path from its vertex list, which must start at (0,0), end on
  /// the diagonal and be strictly increasing in the product order.
  static LatticePath from_vertices(std::span<const Point> vertices);

  int order() const noexcept { return order_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t step_count() const noexcept { return steps_.size(); }

  /// Prefix sums of the steps, starting at (0,0); step_count() + 1 entries.
  std::vector<Point> vertices() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  LatticePath(int order, std::vector<Step> steps)
      : order_(order), steps_(std::move(steps)) {}

  int order_;
  std::vector<Step> steps_;
};

struct ClassMembership {
  bool subdiagonal = false;
  bool delannoy = false;

  bool contains(PathClass cls) const noexcept;
  /// Tags in declaration order: General first, SubDelannoy last.
  std::vector<PathClass> tags() const;
};

ClassMembership path_class_membership(const LatticePath& path);

inline bool belongs_to(const LatticePath& path, PathClass cls) {
  return path_class_membership(path).contains(cls);
}

/// Parses whitespace-separated "dx,dy" tokens.
LatticePath parse_path(std::string_view text);
std::string format_path(const LatticePath& path);

/// Point reflection through (n/2, n/2).
constexpr Point rotate180(Point v, int n) noexcept {
  return {n - v.x, n - v.y};
}

/// The path traversed backwards after reflecting through (n/2, n/2).
/// An involution; maps line x=k to x=n-k and exchanges subdiagonal and
/// superdiagonal paths.
LatticePath rotate180(const LatticePath& path);

}  // namespace activeset

template <>
struct std::hash<activeset::LatticePath> {
  std::size_t operator()(const activeset::LatticePath& path) const noexcept;
};

#endif  // ACTIVESET_PATH_HPP_
