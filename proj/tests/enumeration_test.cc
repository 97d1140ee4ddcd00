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

#include "activeset/enumeration.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace activeset {
namespace {

std::set<std::vector<Point>> enumerated(int n, PathClass cls) {
  std::set<std::vector<Point>> out;
  std::size_t visits = 0;
  for_each_path(n, cls, [&](const LatticePath& p) {
    out.insert(p.vertices());
    ++visits;
  });
  EXPECT_EQ(visits, out.size()) << "duplicate paths";
  return out;
}

TEST(EnumerationTest, MatchesChainOracle) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(enumerated(n, PathClass::kGeneral), oracle::chains(n, false, false));
    EXPECT_EQ(enumerated(n, PathClass::kSubdiagonal), oracle::chains(n, true, false));
    EXPECT_EQ(enumerated(n, PathClass::kDelannoy), oracle::chains(n, false, true));
    EXPECT_EQ(enumerated(n, PathClass::kSubDelannoy), oracle::chains(n, true, true));
  }
}

TEST(EnumerationTest, CountsMatchOracles) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_paths(n, PathClass::kGeneral), oracle::count_general(n, false)) << n;
    EXPECT_EQ(count_paths(n, PathClass::kSubdiagonal), oracle::count_general(n, true)) << n;
  }
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(count_paths(n, PathClass::kDelannoy), oracle::delannoy(n)) << n;
    EXPECT_EQ(count_paths(n, PathClass::kSubDelannoy), oracle::schroeder(n)) << n;
  }
}

TEST(EnumerationTest, KnownCounts) {
  EXPECT_EQ(count_paths(2, PathClass::kGeneral), 26);
  EXPECT_EQ(count_paths(3, PathClass::kDelannoy), 63);
  EXPECT_EQ(count_paths(2, PathClass::kSubdiagonal), 12);
  EXPECT_EQ(count_paths(4, PathClass::kGeneral), 2568);
  EXPECT_EQ(count_paths(1, PathClass::kGeneral), 3);
}

TEST(EnumerationTest, CountsAreExactBeyond64Bits) {
  // |D_n| grows like 5.83^n; n = 60 needs well over 64 bits.
  const BigCount big = count_paths(60, PathClass::kDelannoy);
  EXPECT_GT(big, BigCount(std::numeric_limits<std::uint64_t>::max()));
  // Same value through the closed form, in arbitrary precision.
  BigCount closed = 0;
  for (int k = 0; k <= 60; ++k) {
    BigCount a = 1, b = 1;
    for (int i = 1; i <= k; ++i) {
      a = a * (60 - k + i) / i;
      b = b * (60 + i) / i;
    }
    closed += a * b;
  }
  EXPECT_EQ(big, closed);
}

TEST(EnumerationTest, EnumeratedCountMatchesDp) {
  for (int n = 1; n <= 4; ++n) {
    for (auto cls : {PathClass::kGeneral, PathClass::kSubdiagonal,
                     PathClass::kDelannoy, PathClass::kSubDelannoy}) {
      std::uint64_t seen = 0;
      for_each_path(n, cls, [&](const LatticePath&) { ++seen; });
      EXPECT_EQ(BigCount(seen), count_paths(n, cls));
    }
  }
}

TEST(EnumerationTest, ShardsPartitionTheClass) {
  for (auto cls : {PathClass::kGeneral, PathClass::kSubdiagonal}) {
    std::set<std::vector<Point>> merged;
    std::size_t total = 0;
    for (const Step& s : first_steps(4, cls)) {
      PathEnumerator e(4, cls, s);
      while (auto p = e.next()) {
        EXPECT_EQ(p->steps().front(), s);
        merged.insert(p->vertices());
        ++total;
      }
    }
    EXPECT_EQ(total, merged.size());
    EXPECT_EQ(merged, enumerated(4, cls));
  }
}

TEST(EnumerationTest, EnumeratorIsExhausted) {
  PathEnumerator e(1, PathClass::kDelannoy);
  EXPECT_TRUE(e.next());
  EXPECT_TRUE(e.next());
  EXPECT_TRUE(e.next());
  EXPECT_FALSE(e.next());
  EXPECT_FALSE(e.next());
}

TEST(EnumerationTest, CountTable) {
  const CountTable t = CountTable::compute(PathClass::kSubDelannoy, 5);
  ASSERT_EQ(t.values.size(), 5U);
  EXPECT_EQ(t.values.at(5), 394);
}

TEST(EnumerationTest, HistogramMatchesLiteralActivity) {
  for (int n = 1; n <= 4; ++n) {
    const Histogram h = histogram_active_sets(n, PathClass::kGeneral);
    std::vector<std::uint64_t> expected(std::size_t{1} << (n - 1), 0);
    for_each_path(n, PathClass::kGeneral, [&](const LatticePath& p) {
      std::uint64_t mask = 0;
      for (int k : oracle::active_lines(p)) mask |= std::uint64_t{1} << (k - 1);
      ++expected[mask];
    });
    EXPECT_EQ(h.counts, expected) << n;
    EXPECT_TRUE(h.uniform());
  }
}

TEST(EnumerationTest, SubdiagonalHistograms) {
  const Histogram two = histogram_active_sets(2, PathClass::kSubdiagonal);
  EXPECT_EQ(two.counts, (std::vector<std::uint64_t>{6, 6}));
  const Histogram five = histogram_active_sets(5, PathClass::kSubdiagonal);
  EXPECT_EQ(five.total(), 6304U);
  EXPECT_EQ(five.count(LineSet::parse(5, "1,4")), 394U);
  EXPECT_TRUE(five.uniform());
}

TEST(EnumerationTest, MaximalReadingIsNotUniform) {
  const Histogram h =
      histogram_active_sets(3, PathClass::kSubdiagonal, ActivityReading::kMaximal);
  std::vector<std::uint64_t> expected(4, 0);
  for_each_path(3, PathClass::kSubdiagonal, [&](const LatticePath& p) {
    std::uint64_t mask = 0;
    for (int k : oracle::active_lines_maximal(p)) mask |= std::uint64_t{1} << (k - 1);
    ++expected[mask];
  });
  EXPECT_EQ(h.counts, expected);
  EXPECT_EQ(h.total(), 88U);
  EXPECT_FALSE(h.uniform());
}

TEST(EnumerationTest, Budget) {
  EXPECT_ERROR_CODE(histogram_active_sets(4, PathClass::kGeneral,
                                          ActivityReading::kExistential, 100),
                    kBudgetExceeded);
  EXPECT_NO_THROW(require_within_budget(4, PathClass::kGeneral, 2568));
  EXPECT_ERROR_CODE(require_within_budget(4, PathClass::kGeneral, 2567), kBudgetExceeded);
  EXPECT_ERROR_CODE(count_paths(0, PathClass::kGeneral), kInvalidInput);
}

}  // namespace
}  // namespace activeset
