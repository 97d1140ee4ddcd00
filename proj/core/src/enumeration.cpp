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

#include "activeset/enumeration.hpp"

#include <algorithm>

#include "activeset/error.hpp"

namespace activeset {

namespace {

void require_order(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "order must be at least 1, got " + std::to_string(n));
  }
}

bool is_sub(PathClass cls) {
  return cls == PathClass::kSubdiagonal || cls == PathClass::kSubDelannoy;
}

bool is_unit(PathClass cls) {
  return cls == PathClass::kDelannoy || cls == PathClass::kSubDelannoy;
}

}  // namespace

PathEnumerator::PathEnumerator(int n, PathClass cls) : n_(n), cls_(cls) {
  require_order(n);
}

PathEnumerator::PathEnumerator(int n, PathClass cls, Step first_step)
    : PathEnumerator(n, cls) {
  floor_ = 1;
  if (!allowed({0, 0}, first_step)) {
    done_ = true;
    return;
  }
  steps_.push_back(first_step);
  at_.push_back({0, 0});
}

bool PathEnumerator::allowed(Point at, Step s) const noexcept {
  if (s.dx < 0 || s.dy < 0 || (s.dx == 0 && s.dy == 0)) return false;
  const Point to{at.x + s.dx, at.y + s.dy};
  if (to.x > n_ || to.y > n_) return false;
  if (is_unit(cls_) && (s.dx > 1 || s.dy > 1)) return false;
  if (is_sub(cls_) && to.y > to.x) return false;
  return true;
}

std::optional<Step> PathEnumerator::first_allowed(Point at,
                                                  Step from) const noexcept {
  for (int dx = from.dx; dx <= n_ - at.x; ++dx) {
    for (int dy = dx == from.dx ? from.dy : 0; dy <= n_ - at.y; ++dy) {
      if (allowed(at, {dx, dy})) return Step{dx, dy};
    }
  }
  return std::nullopt;
}

void PathEnumerator::descend() {
  Point at = steps_.empty() ? Point{0, 0}
                            : Point{at_.back().x + steps_.back().dx,
                                    at_.back().y + steps_.back().dy};
  while (at != Point{n_, n_}) {
    // Every admissible position can still reach (n,n), so this never fails.
    const Step s = *first_allowed(at, {0, 0});
    steps_.push_back(s);
    at_.push_back(at);
    at = {at.x + s.dx, at.y + s.dy};
  }
}

std::optional<LatticePath> PathEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();
    return LatticePath::from_steps(steps_);
  }
  while (steps_.size() > floor_) {
    const Step last = steps_.back();
    const Point at = at_.back();
    steps_.pop_back();
    at_.pop_back();
    if (auto s = first_allowed(at, {last.dx, last.dy + 1})) {
      steps_.push_back(*s);
      at_.push_back(at);
      descend();
      return LatticePath::from_steps(steps_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Step> first_steps(int n, PathClass cls) {
  require_order(n);
  std::vector<Step> out;
  for (int dx = 0; dx <= n; ++dx) {
    for (int dy = 0; dy <= n; ++dy) {
      PathEnumerator probe(n, cls, Step{dx, dy});
      if (probe.next()) out.push_back({dx, dy});
    }
  }
  return out;
}

void for_each_path(int n, PathClass cls,
                   const std::function<void(const LatticePath&)>& visit) {
  PathEnumerator e(n, cls);
  while (auto p = e.next()) visit(*p);
}

BigCount count_paths(int n, PathClass cls) {
  require_order(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<BigCount>> ways(size, std::vector<BigCount>(size));
  ways[0][0] = 1;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (a == 0 && b == 0) continue;
      if (is_sub(cls) && b > a) continue;
      BigCount total = 0;
      if (is_unit(cls)) {
        if (a > 0) total += ways[a - 1][b];
        if (b > 0) total += ways[a][b - 1];
        if (a > 0 && b > 0) total += ways[a - 1][b - 1];
      } else {
        for (int i = 0; i <= a; ++i) {
          for (int j = 0; j <= b; ++j) {
            if (i == 0 && j == 0) continue;
            total += ways[a - i][b - j];
          }
        }
      }
      ways[a][b] = std::move(total);
    }
  }
  return ways[n][n];
}

CountTable CountTable::compute(PathClass cls, int max_n) {
  CountTable table{cls, {}};
  for (int n = 1; n <= max_n; ++n) table.values.emplace(n, count_paths(n, cls));
  return table;
}

std::uint64_t Histogram::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::uint64_t Histogram::count(const LineSet& set) const {
  if (set.order() != n) {
    throw Error(ErrorCode::kInvalidInput, "line set order mismatch");
  }
  return counts.at(set.mask());
}

bool Histogram::uniform() const noexcept {
  return std::ranges::adjacent_find(counts, std::ranges::not_equal_to{}) ==
         counts.end();
}

void require_within_budget(int n, PathClass cls, std::uint64_t budget) {
  const BigCount total = count_paths(n, cls);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(path_class_name(cls)) + " at n=" +
                    std::to_string(n) + " has " + total.str() +
                    " paths, over the budget of " + std::to_string(budget));
  }
}

Histogram histogram_active_sets(int n, PathClass cls, ActivityReading reading,
                                std::uint64_t budget) {
  require_order(n);
  require_within_budget(n, cls, budget);
  if (n - 1 > 30) {
    throw Error(ErrorCode::kBudgetExceeded,
                "histogram over 2^" + std::to_string(n - 1) + " subsets");
  }
  Histogram h{n, cls, std::vector<std::uint64_t>(std::size_t{1} << (n - 1), 0)};
  for_each_path(n, cls, [&](const LatticePath& p) {
    ++h.counts[active_set(p, reading).mask()];
  });
  return h;
}

}  // namespace activeset
