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

#include "activeset/bijection.hpp"

#include <algorithm>
#include <string>

#include "activeset/error.hpp"

namespace activeset {

std::string_view case_name(CaseId id) {
  switch (id) {
    case CaseId::kCase1: return "case1";
    case CaseId::kCase2: return "case2";
    case CaseId::kCase3: return "case3";
    case CaseId::kCase4: return "case4";
    case CaseId::kCase5: return "case5";
  }
  return "unknown";
}

namespace {

std::string where(const LatticePath& path, int k) {
  return "'" + format_path(path) + "' at x=" + std::to_string(k);
}

[[noreturn]] void assertion(const std::string& what, const LatticePath& path,
                            int k) {
  throw Error(ErrorCode::kInternalAssertion, what + " for " + where(path, k));
}

bool in_range(const LatticePath& path, int k) {
  return k >= 1 && k <= path.order() - 1;
}

ActiveFinding require_active(const LatticePath& path, int k,
                             ActivityReading reading) {
  if (in_range(path, k)) {
    if (auto f = active_vertex(path, k, reading)) return *f;
  }
  throw Error(ErrorCode::kLineNotActive,
              "x=" + std::to_string(k) + " is not an active interior line of '" +
                  format_path(path) + "'");
}

void require_inactive(const LatticePath& path, int k, ActivityReading reading) {
  if (in_range(path, k) && !active_vertex(path, k, reading)) return;
  throw Error(ErrorCode::kLineNotInactive,
              "x=" + std::to_string(k) +
                  " is not an inactive interior line of '" +
                  format_path(path) + "'");
}

void require_subdiagonal(const LatticePath& path) {
  if (!path_class_membership(path).subdiagonal) {
    throw Error(ErrorCode::kNotSubdiagonal,
                "'" + format_path(path) + "' rises above y=x");
  }
}

LatticePath rebuild(const std::vector<Point>& v, const LatticePath& source,
                    int k) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].x < v[i - 1].x || v[i].y < v[i - 1].y || v[i] == v[i - 1]) {
      assertion("shifted vertex list is not monotone", source, k);
    }
  }
  return LatticePath::from_vertices(v);
}

void shift(std::vector<Point>& v, IndexRange range, int dy) {
  for (std::size_t i = range.begin; i < range.end; ++i) v[i].y += dy;
}

// Index of the first vertex after the lattice point (k,k) in (x, y) order.
// Along a monotone path this is also path order.
std::size_t first_after_diagonal_point(const std::vector<Point>& v, int k) {
  const Point c{k, k};
  return static_cast<std::size_t>(
      std::ranges::find_if(v, [&](Point p) { return p > c; }) - v.begin());
}

enum class ReturnRule {
  kFirstReturn,  // subdiagonal map: Q ends the first balanced subpath from P
  kWeaklyAbove,  // general case 1: Q is the first vertex weakly above L_P
};

// The map on the "below" side: the subdiagonal map, and cases 1 and 3 of
// the general map. P is the active vertex, A and B its neighbours.
MapResult lower_at(const LatticePath& path, const std::vector<Point>& v,
                   const ActiveFinding& finding, ReturnRule rule, CaseId id) {
  const int k = finding.k;
  const std::size_t i = finding.vertex_index;
  const Point p = v[i];
  const Point a = v[i - 1];
  const Point b = v[i + 1];
  const int lp = diag_level(p);
  const SlopeClass slope = slope_class(a, p);

  std::size_t j = i + 1;
  int h = 0;
  if (slope == SlopeClass::kLessThanOne) {
    // Q: first vertex strictly above L_P.
    while (j < v.size() && diag_level(v[j]) <= lp) ++j;
    if (j == v.size() || j == i + 1) {
      assertion("no vertex strictly above L_P after a nonempty block", path, k);
    }
    // The block B..pred(Q) must touch L_P; its highest level is what the
    // inverse reads back.
    int block_max = diag_level(v[i + 1]);
    for (std::size_t t = i + 1; t < j; ++t) {
      block_max = std::max(block_max, diag_level(v[t]));
    }
    if (block_max != lp) {
      assertion("block after P never returns to L_P", path, k);
    }
    h = b.y - p.y;
  } else {
    if (rule == ReturnRule::kFirstReturn) {
      while (j < v.size() && diag_level(v[j]) != lp) {
        if (diag_level(v[j]) > lp) {
          assertion("subpath from P rises above L_P before returning", path, k);
        }
        ++j;
      }
    } else {
      while (j < v.size() && diag_level(v[j]) < lp) ++j;
    }
    if (j == v.size()) assertion("no vertex Q closes the block", path, k);
    h = lp - diag_level(a);
  }

  const IndexRange block{i + 1, j};
  std::vector<Point> w = v;
  shift(w, block, -h);
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
  LatticePath image = rebuild(w, path, k);

  DeactivationTrace trace{
      .direction = TraceDirection::kDeactivate,
      .k = k,
      .ftilde_case = {id, slope},
      .p = p,
      .a = a,
      .b = b,
      .b_prime = Point{k, w[i].y},
      .q = v[j],
      .h = h,
      .shifted_range = block,
  };
  return {std::move(image), trace};
}

// Inverse of lower_at. `general` selects the case-1 recapture of h, which
// caps the level of Q at the diagonal.
MapResult raise_at(const LatticePath& path, const std::vector<Point>& v, int k,
                   bool general, CaseId id) {
  const std::size_t bi = first_after_diagonal_point(v, k);
  if (bi == 0 || bi >= v.size() || v[bi].x <= k) {
    assertion("successor of the inactive line is not to its right", path, k);
  }
  const Point a = v[bi - 1];
  const Point b = v[bi];
  const Point b_prime{k, b.y};
  const SlopeClass slope = slope_class(a, b_prime);

  std::size_t j = bi;
  int h = 0;
  Point p{};
  if (slope == SlopeClass::kLessThanOne) {
    const int lb = diag_level(b_prime);
    while (j < v.size() && diag_level(v[j]) <= lb) ++j;
    if (j == v.size() || j == bi) {
      assertion("no vertex strictly above L_B' after a nonempty block", path, k);
    }
    int block_max = diag_level(v[bi]);
    for (std::size_t t = bi; t < j; ++t) {
      block_max = std::max(block_max, diag_level(v[t]));
    }
    h = lb - block_max;
    p = b_prime;
  } else {
    const int la = diag_level(a);
    while (j < v.size() && diag_level(v[j]) < la) ++j;
    if (j == v.size()) assertion("no vertex weakly above L_A", path, k);
    const int lq = diag_level(v[j]);
    h = (general ? std::min(lq, 0) : lq) - la;
    p = Point{k, k + la + h};
  }
  if (h < 0) assertion("negative recaptured shift", path, k);

  const IndexRange block{bi, j};
  std::vector<Point> w = v;
  shift(w, block, h);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(bi), p);
  LatticePath preimage = rebuild(w, path, k);

  DeactivationTrace trace{
      .direction = TraceDirection::kActivate,
      .k = k,
      .ftilde_case = {id, slope},
      .p = p,
      .a = a,
      .b = b,
      .b_prime = b_prime,
      .q = v[j],
      .h = h,
      .shifted_range = block,
  };
  return {std::move(preimage), trace};
}

DeactivationTrace unrotate(DeactivationTrace t, int n, std::size_t vertex_count,
                           CaseId id) {
  auto rot = [n](Point v) { return rotate180(v, n); };
  const Point a = t.a;
  t.k = n - t.k;
  t.ftilde_case.id = id;
  t.p = rot(t.p);
  t.a = rot(t.b);
  t.b = rot(a);
  if (t.b_prime) t.b_prime = rot(*t.b_prime);
  if (t.q) t.q = rot(*t.q);
  const std::size_t last = vertex_count;
  t.shifted_range = t.shifted_range.empty()
                        ? IndexRange{}
                        : IndexRange{last - t.shifted_range.end,
                                     last - t.shifted_range.begin};
  return t;
}

CaseId domain_case(const LatticePath& path, Point a, Point p, Point b, int k) {
  const int la = diag_level(a);
  const int lp = diag_level(p);
  const int lb = diag_level(b);
  if (la <= 0 && lp <= 0 && lb <= 0) return CaseId::kCase1;
  if (la >= 0 && lp >= 0 && lb >= 0) return CaseId::kCase2;
  if (la > 0 && lp < 0) return CaseId::kCase3;
  if (lp > 0 && lb < 0) return CaseId::kCase4;
  if (lp == 0 && ((la < 0 && lb > 0) || (la > 0 && lb < 0))) {
    return CaseId::kCase5;
  }
  assertion("active vertex fits none of the five cases", path, k);
}

MapResult deactivate_dispatch(const LatticePath& path, int k,
                              ActivityReading reading,
                              std::optional<CaseId> expected) {
  const ActiveFinding f = require_active(path, k, reading);
  const auto v = path.vertices();
  const std::size_t i = f.vertex_index;
  const CaseId id = domain_case(path, v[i - 1], v[i], v[i + 1], k);
  if (expected && id != *expected) {
    assertion("rotated application landed in " + std::string(case_name(id)),
              path, k);
  }
  const int n = path.order();
  switch (id) {
    case CaseId::kCase1:
      return lower_at(path, v, f, ReturnRule::kWeaklyAbove, id);
    case CaseId::kCase3: {
      auto r = lower_at(path, v, f, ReturnRule::kWeaklyAbove, id);
      if (r.trace.ftilde_case.subcase != SlopeClass::kLessThanOne) {
        assertion("case 3 with slope of AP at least one", path, k);
      }
      return r;
    }
    case CaseId::kCase2:
    case CaseId::kCase4: {
      const CaseId inner =
          id == CaseId::kCase2 ? CaseId::kCase1 : CaseId::kCase3;
      auto r = deactivate_dispatch(rotate180(path), n - k, reading, inner);
      return {rotate180(r.path), unrotate(r.trace, n, v.size(), id)};
    }
    case CaseId::kCase5: {
      std::vector<Point> w = v;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      DeactivationTrace trace{
          .direction = TraceDirection::kDeactivate,
          .k = k,
          .ftilde_case = {CaseId::kCase5, std::nullopt},
          .p = v[i],
          .a = v[i - 1],
          .b = v[i + 1],
          .b_prime = std::nullopt,
          .q = std::nullopt,
          .h = 0,
          .shifted_range = {},
      };
      return {rebuild(w, path, k), trace};
    }
  }
  assertion("unreachable case", path, k);
}

struct ImageSides {
  std::size_t b_index = 0;
  Point a;
  Point b;
};

ImageSides image_sides(const LatticePath& path, const std::vector<Point>& v,
                       int k) {
  const std::size_t bi = first_after_diagonal_point(v, k);
  if (bi == 0 || bi >= v.size()) {
    assertion("lattice point (k,k) is not bracketed by vertices", path, k);
  }
  return {bi, v[bi - 1], v[bi]};
}

std::vector<CaseId> table_rows(Point a, Point b, int k) {
  const int la = diag_level(a);
  const int lb = diag_level(b);
  std::vector<CaseId> rows;
  if (la <= 0 && lb <= 0) rows.push_back(CaseId::kCase1);
  if (la >= 0 && lb >= 0) rows.push_back(CaseId::kCase2);
  if (la > 0 && b.y < k) rows.push_back(CaseId::kCase3);
  if (a.y > k && lb < 0) rows.push_back(CaseId::kCase4);
  const bool opposite_diag = (la < 0 && lb > 0) || (la > 0 && lb < 0);
  const bool weakly_opposite_k = (a.y - k) * (b.y - k) <= 0;
  if (opposite_diag && weakly_opposite_k) rows.push_back(CaseId::kCase5);
  return rows;
}

CaseId canonical_row(const LatticePath& path, const std::vector<CaseId>& rows,
                     int k) {
  if (rows.size() == 1) return rows.front();
  if (rows == std::vector<CaseId>{CaseId::kCase1, CaseId::kCase2}) {
    return CaseId::kCase1;
  }
  assertion("image table rows are not exhaustive and exclusive", path, k);
}

MapResult activate_dispatch(const LatticePath& path, int k,
                            ActivityReading reading,
                            std::optional<CaseId> expected) {
  require_inactive(path, k, reading);
  const auto v = path.vertices();
  const ImageSides sides = image_sides(path, v, k);
  const auto rows = table_rows(sides.a, sides.b, k);
  const CaseId id = canonical_row(path, rows, k);
  if (expected && id != *expected) {
    assertion("rotated inverse landed in " + std::string(case_name(id)), path,
              k);
  }
  const int n = path.order();
  switch (id) {
    case CaseId::kCase1: {
      auto r = raise_at(path, v, k, /*general=*/true, id);
      if (rows.size() == 2 && !expected) {
        // Both rows match; the rotated route must reconstruct the same path.
        auto alt = activate_dispatch(rotate180(path), n - k, reading,
                                     CaseId::kCase1);
        if (rotate180(alt.path) != r.path) {
          assertion("case 1 and case 2 inverses disagree on the overlap",
                    path, k);
        }
      }
      return r;
    }
    case CaseId::kCase3: {
      auto r = raise_at(path, v, k, /*general=*/true, id);
      if (r.trace.ftilde_case.subcase != SlopeClass::kLessThanOne) {
        assertion("case 3 image with slope of AB' at least one", path, k);
      }
      return r;
    }
    case CaseId::kCase2:
    case CaseId::kCase4: {
      const CaseId inner =
          id == CaseId::kCase2 ? CaseId::kCase1 : CaseId::kCase3;
      auto r = activate_dispatch(rotate180(path), n - k, reading, inner);
      return {rotate180(r.path), unrotate(r.trace, n, v.size(), id)};
    }
    case CaseId::kCase5: {
      std::vector<Point> w = v;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(sides.b_index),
               Point{k, k});
      DeactivationTrace trace{
          .direction = TraceDirection::kActivate,
          .k = k,
          .ftilde_case = {CaseId::kCase5, std::nullopt},
          .p = Point{k, k},
          .a = sides.a,
          .b = sides.b,
          .b_prime = std::nullopt,
          .q = std::nullopt,
          .h = 0,
          .shifted_range = {},
      };
      return {rebuild(w, path, k), trace};
    }
  }
  assertion("unreachable case", path, k);
}

void require_deactivated(const MapResult& r, int k, ActivityReading reading,
                         const LatticePath& source) {
  if (active_vertex(r.path, k, reading)) {
    assertion("line still active after deactivation", source, k);
  }
}

void require_activated(const MapResult& r, int k, ActivityReading reading,
                       const LatticePath& source) {
  auto f = active_vertex(r.path, k, reading);
  if (!f || f->vertex != r.trace.p) {
    assertion("inserted vertex is not the active vertex of the result",
              source, k);
  }
}

void require_map_class(PathClass cls) {
  if (cls != PathClass::kSubdiagonal && cls != PathClass::kGeneral) {
    throw Error(ErrorCode::kInvalidInput,
                "class must be subdiagonal or general, not " +
                    std::string(path_class_name(cls)));
  }
}

}  // namespace

MapResult deactivate_sub(const LatticePath& path, int k,
                         ActivityReading reading) {
  require_subdiagonal(path);
  const ActiveFinding f = require_active(path, k, reading);
  auto r = lower_at(path, path.vertices(), f, ReturnRule::kFirstReturn,
                    CaseId::kCase1);
  if (!path_class_membership(r.path).subdiagonal) {
    assertion("image is not subdiagonal", path, k);
  }
  require_deactivated(r, k, reading, path);
  return r;
}

MapResult activate_sub(const LatticePath& path, int k,
                       ActivityReading reading) {
  require_subdiagonal(path);
  require_inactive(path, k, reading);
  auto r = raise_at(path, path.vertices(), k, /*general=*/false, CaseId::kCase1);
  if (!path_class_membership(r.path).subdiagonal) {
    assertion("preimage is not subdiagonal", path, k);
  }
  require_activated(r, k, reading, path);
  return r;
}

MapResult deactivate_gen(const LatticePath& path, int k,
                         ActivityReading reading) {
  auto r = deactivate_dispatch(path, k, reading, std::nullopt);
  require_deactivated(r, k, reading, path);
  return r;
}

MapResult activate_gen(const LatticePath& path, int k,
                       ActivityReading reading) {
  auto r = activate_dispatch(path, k, reading, std::nullopt);
  require_activated(r, k, reading, path);
  return r;
}

std::vector<CaseId> image_case_candidates(const LatticePath& path, int k,
                                          ActivityReading reading) {
  require_inactive(path, k, reading);
  const auto v = path.vertices();
  const ImageSides sides = image_sides(path, v, k);
  return table_rows(sides.a, sides.b, k);
}

FTildeCase classify_image_case(const LatticePath& path, int k,
                               ActivityReading reading) {
  require_inactive(path, k, reading);
  const auto v = path.vertices();
  const ImageSides sides = image_sides(path, v, k);
  const CaseId id = canonical_row(path, table_rows(sides.a, sides.b, k), k);
  switch (id) {
    case CaseId::kCase1:
    case CaseId::kCase3:
      return {id, slope_class(sides.a, Point{k, sides.b.y})};
    case CaseId::kCase2:
    case CaseId::kCase4: {
      auto inner =
          classify_image_case(rotate180(path), path.order() - k, reading);
      return {id, inner.subcase};
    }
    case CaseId::kCase5:
      return {id, std::nullopt};
  }
  assertion("unreachable case", path, k);
}

Encoding encode(const LatticePath& path, PathClass cls, LineOrder order,
                ActivityReading reading) {
  require_map_class(cls);
  if (!belongs_to(path, cls)) {
    throw Error(ErrorCode::kInvalidInput,
                "'" + format_path(path) + "' is not " +
                    std::string(path_class_name(cls)));
  }
  const LineSet active = active_set(path, reading);
  auto lines = active.complement().members();
  if (order == LineOrder::kDescending) std::ranges::reverse(lines);

  LatticePath current = path;
  for (int k : lines) {
    current = cls == PathClass::kSubdiagonal
                  ? activate_sub(current, k, reading).path
                  : activate_gen(current, k, reading).path;
  }
  const auto m = path_class_membership(current);
  if (!m.delannoy || (cls == PathClass::kSubdiagonal && !m.subdiagonal)) {
    assertion("activating every inactive line did not give a Delannoy path",
              path, 0);
  }
  return {active, std::move(current)};
}

LatticePath decode(const LineSet& active, const LatticePath& delannoy,
                   PathClass cls, LineOrder order, ActivityReading reading) {
  require_map_class(cls);
  const auto m = path_class_membership(delannoy);
  if (!m.delannoy || (cls == PathClass::kSubdiagonal && !m.subdiagonal)) {
    throw Error(ErrorCode::kInvalidInput,
                "'" + format_path(delannoy) + "' is not " +
                    std::string(path_class_name(delannoy_variant(cls))));
  }
  if (active.order() != delannoy.order()) {
    throw Error(ErrorCode::kInvalidInput,
                "line set order " + std::to_string(active.order()) +
                    " does not match path order " +
                    std::to_string(delannoy.order()));
  }
  auto lines = active.complement().members();
  if (order == LineOrder::kDescending) std::ranges::reverse(lines);

  LatticePath current = delannoy;
  for (int k : lines) {
    current = cls == PathClass::kSubdiagonal
                  ? deactivate_sub(current, k, reading).path
                  : deactivate_gen(current, k, reading).path;
  }
  if (active_set(current, reading) != active) {
    assertion("decoded path has active set {" +
                  active_set(current, reading).to_string() + "}",
              delannoy, 0);
  }
  return current;
}

}  // namespace activeset
