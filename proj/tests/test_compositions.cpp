// Copyright 2026 The compclust Authors
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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "compclust/composition.hpp"
#include "compclust/enumerate.hpp"
#include "compclust/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace compclust {
namespace {

using testing::Parts;

TEST(CompositionTest, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({2, 0, 1}), PatternSetError);
  EXPECT_THROW(Composition({-1}), PatternSetError);
  EXPECT_NO_THROW(Composition(std::vector<int>{}));
}

TEST(CompositionTest, Rendering) {
  const Composition c{2, 3, 2};
  EXPECT_EQ(c.to_string(), "2,3,2");
  EXPECT_EQ(c.to_compact_string(), "232");
  EXPECT_EQ(c.sum(), 7);
  EXPECT_EQ(c.length(), 3u);
  EXPECT_EQ(Composition({1, 2, 4}).reversed(), Composition({4, 2, 1}));
}

TEST(PatternSetTest, ParsesSeparators) {
  const auto ps = PatternSet::parse(" 2,3,4 ; 4,3,2 ");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps.length(), 3u);
  EXPECT_EQ(ps[0], Composition({2, 3, 4}));
  EXPECT_EQ(ps[1], Composition({4, 3, 2}));
  EXPECT_EQ(ps.min_sum(), 9);
  EXPECT_EQ(ps.max_part(), 4);
}

TEST(PatternSetTest, MixedLengthsAreRejected) {
  try {
    PatternSet::parse("2,3;1");
    FAIL() << "expected PatternSetError";
  } catch (const PatternSetError& e) {
    EXPECT_NE(std::string(e.what()).find("patterns must share one length"), std::string::npos);
  }
}

TEST(PatternSetTest, DuplicatesAreRejected) {
  EXPECT_THROW(PatternSet::parse("1,2;1,2"), PatternSetError);
}

TEST(PatternSetTest, ParseErrorsCarryPosition) {
  try {
    PatternSet::parse("2,x,2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(PatternSet::parse("2,,2"), ParseError);
  EXPECT_THROW(PatternSet::parse("2,0"), ParseError);
  EXPECT_THROW(Composition({2, 0}), PatternSetError);
}

TEST(ContainmentTest, DominationAtOffsets) {
  const Composition host{3, 4, 5, 1};
  EXPECT_TRUE(includes_at(host, Composition{2, 3}, 1));
  EXPECT_TRUE(includes_at(host, Composition{2, 3}, 2));
  EXPECT_FALSE(includes_at(host, Composition{2, 3}, 3));
  EXPECT_THROW(includes_at(host, Composition{2, 3}, 4), DomainError);
  EXPECT_THROW(includes_at(host, Composition{2, 3}, 0), DomainError);
  EXPECT_TRUE(includes(host, Composition{5}));
  EXPECT_FALSE(includes(host, Composition{6}));
}

TEST(ContainmentTest, OccurrencesMatchNaiveCount) {
  const auto ps = PatternSet::parse("1,2;2,1");
  for (const auto& host : enumerate_compositions(9)) {
    const Parts h(host.parts().begin(), host.parts().end());
    const auto occ = occurrences(host, ps);
    EXPECT_EQ(occ[0], testing::naive_count(h, {1, 2}));
    EXPECT_EQ(occ[1], testing::naive_count(h, {2, 1}));
    EXPECT_EQ(avoids(host, ps), occ[0] == 0 && occ[1] == 0);
  }
}

TEST(EnumerateTest, MatchesRecursiveGeneration) {
  for (int n = 0; n <= 12; ++n) {
    std::set<Parts> expected;
    testing::for_each_composition(n, [&](const Parts& p) { expected.insert(p); });
    std::set<Parts> got;
    for (const auto& c : enumerate_compositions(static_cast<unsigned>(n))) {
      got.emplace(c.parts().begin(), c.parts().end());
    }
    EXPECT_EQ(got, expected) << "n = " << n;
    EXPECT_EQ(enumerate_compositions(static_cast<unsigned>(n)).size(),
              n == 0 ? 1u : (1u << (n - 1)));
  }
}

TEST(EnumerateTest, GuardIsEnforced) {
  EXPECT_THROW(enumerate_compositions(27), GuardError);
  EXPECT_NO_THROW(enumerate_compositions(27, 27));
  OracleOptions options;
  options.guard = 10;
  EXPECT_THROW(oracle_avoider_count(11, PatternSet::parse("2"), options), GuardError);
}

TEST(OracleTest, SmallKnownCount) {
  // Of the compositions of 4 only [4] and [1,1,1,1] avoid both 12 and 21.
  EXPECT_EQ(oracle_avoider_count(4, PatternSet::parse("1,2;2,1")), 2u);
}

TEST(OracleTest, AvoiderCountsMatchNaive) {
  for (const char* text : {"2,3,2", "1,2;2,1", "3", "2,2;1,3", "1,1,2"}) {
    const auto ps = PatternSet::parse(text);
    for (int n = 0; n <= 14; ++n) {
      EXPECT_EQ(oracle_avoider_count(static_cast<unsigned>(n), ps),
                testing::naive_avoiders(n, testing::to_parts(ps)))
          << text << " n = " << n;
    }
  }
}

TEST(OracleTest, JointCountsIndependentOfWorkersAndIsa) {
  const auto ps = PatternSet::parse("2,3,4;4,3,2");
  OracleOptions one;
  one.workers = 1;
  one.isa = kernels::Isa::scalar;
  OracleOptions many;
  many.workers = 8;
  const auto a = oracle_joint_counts(20, ps, one);
  const auto b = oracle_joint_counts(20, ps, many);
  EXPECT_EQ(a, b);
  std::uint64_t total = 0;
  for (const auto& [occ, count] : a) total += count;
  EXPECT_EQ(total, 1u << 19);
}

TEST(OracleTest, JointCountsMatchNaive) {
  const auto ps = PatternSet::parse("1,2;2,2");
  for (int n = 0; n <= 12; ++n) {
    const auto got = oracle_joint_counts(static_cast<unsigned>(n), ps);
    const auto want = testing::naive_joint(n, testing::to_parts(ps));
    ASSERT_EQ(got.size(), want.size()) << "n = " << n;
    for (const auto& [occ, count] : want) EXPECT_EQ(got.at(occ), count);
  }
}

}  // namespace
}  // namespace compclust
