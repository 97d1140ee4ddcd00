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

#ifndef ACTIVESET_BIJECTION_HPP_
#define ACTIVESET_BIJECTION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "activeset/active_lines.hpp"
#include "activeset/line_set.hpp"
#include "activeset/path.hpp"

namespace activeset {

// The deactivation map removes the active vertex P on x = k and shifts a
// block of its successors vertically so that x = k becomes inactive while
// every other line keeps its status. On subdiagonal paths it is one map
// with two branches (slope of A -> P below one, or not); on general paths
// it splits into five cases according to where A, P, B sit relative to
// y = x. Cases 2 and 4 are the 180-degree conjugates of cases 1 and 3.

enum class CaseId { kCase1 = 1, kCase2, kCase3, kCase4, kCase5 };

struct FTildeCase {
  CaseId id = CaseId::kCase1;
  // Slope branch that applied (in the rotated frame for cases 2 and 4).
  // Always empty for case 5.
  std::optional<SlopeClass> subcase;

  friend bool operator==(const FTildeCase&, const FTildeCase&) = default;
};

std::string_view case_name(CaseId id);

enum class TraceDirection { kDeactivate, kActivate };

struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open

  bool empty() const noexcept { return begin >= end; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Everything needed to replay or draw one application of the map. Points
/// are in the coordinates of the path the map was applied to, except P
/// under activation, which is the vertex inserted into the result.
struct DeactivationTrace {
  TraceDirection direction = TraceDirection::kDeactivate;
  int k = 0;
  FTildeCase ftilde_case;
  Point p;
  Point a;  // predecessor of P (under activation: of B)
  Point b;  // successor of P (under activation: first vertex past (k,k))
  std::optional<Point> b_prime;  // (k, y of B in the image)
  std::optional<Point> q;        // end marker of the shifted block
  int h = 0;                     // magnitude of the vertical shift
  IndexRange shifted_range;      // source vertex indices that moved

  friend bool operator==(const DeactivationTrace&,
                         const DeactivationTrace&) = default;
};

struct MapResult {
  LatticePath path;
  DeactivationTrace trace;
};

/// The map on subdiagonal paths. Throws kNotSubdiagonal, kLineNotActive.
MapResult deactivate_sub(const LatticePath& path, int k,
                         ActivityReading reading = ActivityReading::kExistential);

/// Inverse of deactivate_sub. Throws kNotSubdiagonal, kLineNotInactive.
MapResult activate_sub(const LatticePath& path, int k,
                       ActivityReading reading = ActivityReading::kExistential);

/// The five-case extension to all of G_n. Throws kLineNotActive.
MapResult deactivate_gen(const LatticePath& path, int k,
                         ActivityReading reading = ActivityReading::kExistential);

/// Inverse of deactivate_gen. Throws kLineNotInactive.
MapResult activate_gen(const LatticePath& path, int k,
                       ActivityReading reading = ActivityReading::kExistential);

/// Which case an image path (k inactive) came from. A and B are the last
/// vertex before and the first vertex after the lattice point (k,k) in
/// (x, y) order. When A and B both lie on y = x, cases 1 and 2 both match
/// and case 1 is returned.
FTildeCase classify_image_case(
    const LatticePath& path, int k,
    ActivityReading reading = ActivityReading::kExistential);

/// Every row of the image table that matches (k inactive). Exactly one
/// entry, or {kCase1, kCase2} when A and B both lie on y = x.
std::vector<CaseId> image_case_candidates(
    const LatticePath& path, int k,
    ActivityReading reading = ActivityReading::kExistential);

enum class LineOrder { kAscending, kDescending };

struct Encoding {
  LineSet active;
  LatticePath delannoy;

  friend bool operator==(const Encoding&, const Encoding&) = default;
};

/// Records the active set, then activates every inactive line. `cls` is
/// kSubdiagonal or kGeneral; the path must belong to it.
Encoding encode(const LatticePath& path, PathClass cls,
                LineOrder order = LineOrder::kAscending,
                ActivityReading reading = ActivityReading::kExistential);

/// Deactivates every line of `delannoy` outside `active`.
LatticePath decode(const LineSet& active, const LatticePath& delannoy,
                   PathClass cls, LineOrder order = LineOrder::kDescending,
                   ActivityReading reading = ActivityReading::kExistential);

}  // namespace activeset

#endif  // ACTIVESET_BIJECTION_HPP_
