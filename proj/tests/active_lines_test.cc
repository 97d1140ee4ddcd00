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

#include <gtest/gtest.h>

#include <set>

#include "activeset/active_lines.hpp"
#include "activeset/enumeration.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace activeset {
namespace {

std::set<int> as_set(const LineSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

TEST(ActiveLinesTest, BelowBalancedWithLongReturn) {
  const LatticePath p = parse_path("2,0 2,1 3,2 2,1 1,2 0,1 1,1 1,2 0,1 0,1");
  const auto f = active_vertex(p, 4);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->vertex, (Point{4, 1}));
  EXPECT_EQ(f->vertex_index, 2U);
  EXPECT_EQ(f->condition, ActiveCondition::kBelowBalanced);
}

TEST(ActiveLinesTest, DelannoyPathsHaveEveryLineActive) {
  const LatticePath p = parse_path("1,0 1,1 0,1 1,1 0,1 1,0");
  EXPECT_EQ(active_set(p), LineSet::full(4));
  for (const auto& f : active_findings(p)) {
    if (f.condition == ActiveCondition::kOnDiagonal) {
      EXPECT_EQ(f.vertex, (Point{f.k, f.k}));
    }
  }
}

TEST(ActiveLinesTest, LineWithoutVertexIsInactive) {
  const LatticePath p = parse_path("3,3");
  EXPECT_TRUE(active_set(p).empty());
  EXPECT_FALSE(active_vertex(p, 2));
}

TEST(ActiveLinesTest, ReadingsSplitOnDiagnosticPath) {
  const LatticePath p = parse_path("2,1 1,1 1,0 1,3");
  EXPECT_EQ(active_set(p, ActivityReading::kExistential).to_string(), "2");
  EXPECT_TRUE(active_set(p, ActivityReading::kMaximal).empty());
}

TEST(ActiveLinesTest, ReadingsAgreeOnDelannoySteps) {
  for (auto cls : {PathClass::kDelannoy, PathClass::kSubDelannoy}) {
    for_each_path(4, cls, [](const LatticePath& p) {
      EXPECT_EQ(active_set(p, ActivityReading::kExistential),
                active_set(p, ActivityReading::kMaximal))
          << format_path(p);
    });
  }
}

TEST(ActiveLinesTest, OutOfRangeLine) {
  const LatticePath p = parse_path("1,1 1,1 1,1");
  EXPECT_ERROR_CODE(active_vertex(p, 0), kLineOutOfRange);
  EXPECT_ERROR_CODE(active_vertex(p, 3), kLineOutOfRange);
}

TEST(ActiveLinesTest, MatchesLiteralDefinition) {
  for (int n = 1; n <= 4; ++n) {
    for_each_path(n, PathClass::kGeneral, [](const LatticePath& p) {
      EXPECT_EQ(as_set(active_set(p)), oracle::active_lines(p)) << format_path(p);
    });
  }
  for_each_path(5, PathClass::kSubdiagonal, [](const LatticePath& p) {
    EXPECT_EQ(as_set(active_set(p)), oracle::active_lines(p)) << format_path(p);
  });
}

TEST(ActiveLinesTest, MaximalReadingMatchesItsDefinition) {
  for (int n = 1; n <= 4; ++n) {
    for_each_path(n, PathClass::kGeneral, [](const LatticePath& p) {
      EXPECT_EQ(as_set(active_set(p, ActivityReading::kMaximal)),
                oracle::active_lines_maximal(p))
          << format_path(p);
    });
  }
}

TEST(ActiveLinesTest, ActiveVertexIsOneSided) {
  for (int n = 1; n <= 4; ++n) {
    for_each_path(n, PathClass::kGeneral, [](const LatticePath& p) {
      for (const auto& f : active_findings(p)) {
        if (f.condition == ActiveCondition::kOnDiagonal) continue;
        const bool below = f.condition == ActiveCondition::kBelowBalanced;
        EXPECT_EQ(below, f.vertex.y < f.k);
        for (const Point& v : p.vertices()) {
          if (v.x != f.k) continue;
          EXPECT_EQ(below, v.y < v.x) << format_path(p) << " x=" << f.k;
          EXPECT_NE(v.y, v.x) << format_path(p) << " x=" << f.k;
        }
      }
    });
  }
}

TEST(ActiveLinesTest, RotationExchangesConditions) {
  auto mirrored = [](ActiveCondition c) {
    switch (c) {
      case ActiveCondition::kBelowBalanced: return ActiveCondition::kAboveBalanced;
      case ActiveCondition::kAboveBalanced: return ActiveCondition::kBelowBalanced;
      default: return c;
    }
  };
  for (int n = 1; n <= 3; ++n) {
    for_each_path(n, PathClass::kGeneral, [&](const LatticePath& p) {
      const LatticePath r = rotate180(p);
      for (const auto& f : active_findings(p)) {
        const auto g = active_vertex(r, n - f.k);
        ASSERT_TRUE(g) << format_path(p);
        EXPECT_EQ(g->vertex, rotate180(f.vertex, n));
        EXPECT_EQ(g->condition, mirrored(f.condition));
      }
      EXPECT_EQ(active_findings(p).size(), active_findings(r).size());
    });
  }
}

TEST(ActiveLinesTest, AllActiveExactlyForDelannoy) {
  EXPECT_TRUE(check_prop1(parse_path("1,1 1,0 0,1")).consistent);
  const Prop1Verdict v = check_prop1(parse_path("2,1 0,1"));
  EXPECT_TRUE(v.consistent);
  EXPECT_FALSE(v.delannoy);
  EXPECT_FALSE(v.all_active);
  EXPECT_TRUE(v.detail.empty());
}

}  // namespace
}  // namespace activeset
