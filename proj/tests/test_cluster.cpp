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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "compclust/analysis.hpp"
#include "compclust/cluster.hpp"
#include "compclust/enumerate.hpp"
#include "compclust/errors.hpp"
#include "compclust/series.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"
#include "support.hpp"

namespace compclust {

void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
void PrintTo(const RationalFunction& f, std::ostream* os) { *os << f.to_string(); }

namespace {

using testing::Parts;

Polynomial P(std::string_view text, std::vector<std::string> vars = {}) {
  return parse_polynomial(text, std::move(vars));
}

RationalFunction displayed(const reference::DisplayedGf& gf) {
  return RationalFunction(P(gf.numerator).scaled(gf.sign), P(gf.denominator));
}

RationalFunction plain_x_gf(const RationalFunction& f) {
  return RationalFunction(f.num().with_vars({"x"}), f.den().with_vars({"x"}));
}

// Σ_s B_s(x, t) evaluated at t = 1/(1-x).
RationalFunction substituted_total(const SolvedSystem& solved) {
  const RationalFunction one = RationalFunction::constant(1);
  const RationalFunction t_value = (one - RationalFunction::variable("x")).reciprocal();
  return solved.total.substitute("t", t_value);
}

TEST(MergeStateTest, WorkedExampleTransitions) {
  const auto ps = PatternSet::parse(reference::kSetD);
  const State child{{2, 3, 2}};
  const auto far = merge_state(GroupSubset::of({0}), 2, child, ps);
  EXPECT_EQ(far.parent.to_string(), "232");
  EXPECT_EQ(far.weight.x_exp, 5);
  EXPECT_EQ(far.weight.t_exp, 2u);
  const auto near = merge_state(GroupSubset::of({0}), 1, child, ps);
  EXPECT_EQ(near.parent.to_string(), "233");
  EXPECT_EQ(near.weight.x_exp, 3);
  EXPECT_EQ(near.weight.t_exp, 1u);
  EXPECT_THROW(merge_state(GroupSubset::of({0}), 3, child, ps), DomainError);
  EXPECT_THROW(merge_state(GroupSubset::of({0}), 0, child, ps), DomainError);
}

TEST(MergeStateTest, StateCounts) {
  EXPECT_EQ(enumerate_states(PatternSet::parse(reference::kSetD)).size(), 2u);
  EXPECT_EQ(enumerate_states(PatternSet::parse(reference::kSetA)).size(), 5u);
  EXPECT_EQ(enumerate_states(PatternSet::parse(reference::kSetB)).size(), 18u);
  EXPECT_EQ(enumerate_states(PatternSet::parse(reference::kSetC)).size(), 7u);
  EXPECT_EQ(enumerate_states(PatternSet::parse("5")).size(), 1u);
  EXPECT_TRUE(enumerate_states(PatternSet()).empty());
}

TEST(ClusterSystemTest, WorkedExampleEquations) {
  const auto sys = build_system(PatternSet::parse(reference::kSetD), Mode::plain);
  ASSERT_EQ(sys.size(), 2u);
  EXPECT_EQ(sys.equation(0), "B[232] = -x^7*t^3 - x^5*t^2*B[232] - x^5*t^2*B[233]");
  EXPECT_EQ(sys.equation(1), "B[233] = -x^3*t*B[232] - x^3*t*B[233]");
}

TEST(ClusterSystemTest, SingleOverlapFreePart) {
  const auto sys = build_system(PatternSet::parse("5"), Mode::plain);
  ASSERT_EQ(sys.size(), 1u);
  EXPECT_EQ(sys.equation(0), "B[5] = -x^5*t");
}

TEST(ClusterSystemTest, WorkedExampleClosedForms) {
  const std::vector<std::string> xt{"x", "t"};
  const auto solved = solve_symbolic(build_system(PatternSet::parse(reference::kSetD), Mode::plain));
  ASSERT_EQ(solved.values.size(), 2u);
  const Polynomial den = P(reference::kBDen, xt);
  const Polynomial b232 = P(reference::kB232Num[0], xt) * P(reference::kB232Num[1], xt);
  EXPECT_EQ(solved.values[0], RationalFunction(b232, den));
  EXPECT_EQ(solved.values[1], RationalFunction(P(reference::kB233Num, xt), den));
  EXPECT_EQ(solved.total, RationalFunction(P(reference::kGxtNum, xt), den));
  const RationalFunction gx(P(reference::kGxNum),
                            P(reference::kGxDen[0]) * P(reference::kGxDen[1]));
  EXPECT_EQ(substituted_total(solved), gx);
  EXPECT_EQ(cluster_gf(PatternSet::parse(reference::kSetD), Mode::plain), gx);
  EXPECT_EQ(avoider_gf(PatternSet::parse(reference::kSetD)).F, displayed(reference::kGfD));
}

TEST(ClusterSystemTest, NormalizedDisplayString) {
  const auto r = avoider_gf(PatternSet::parse(reference::kSetD));
  EXPECT_EQ(plain_x_gf(r.F).to_string(),
            "(1 - 2*x + x^2 + x^3 - x^4 + x^5)/(1 - 3*x + 2*x^2 + x^3 - 2*x^4 + x^5 - x^6)");
}

TEST(ClusterSystemTest, DisplayedClosedForms) {
  EXPECT_EQ(avoider_gf(PatternSet::parse(reference::kSetA)).F, displayed(reference::kGfA));
  EXPECT_EQ(avoider_gf(PatternSet::parse(reference::kSetB)).F, displayed(reference::kGfB));
  EXPECT_EQ(avoider_gf(PatternSet::parse(reference::kSetC)).F, displayed(reference::kGfC));
}

// Substituting t after solving agrees with substituting before solving.
TEST(ClusterSystemTest, SubstitutionOrderAgrees) {
  for (const char* text : {"2,3,2", "2,3,4;4,3,2", "1,2;2,2", "3,1,3", "2,2;1,3;3,1"}) {
    const auto ps = PatternSet::parse(text);
    const auto plain = solve_symbolic(build_system(ps, Mode::plain));
    EXPECT_EQ(plain_x_gf(substituted_total(plain)), plain_x_gf(cluster_gf(ps, Mode::plain)))
        << text;
    const auto marked = solve_symbolic(build_system(ps, Mode::marker));
    EXPECT_EQ(substituted_total(marked), cluster_gf(ps, Mode::marker)) << text;
  }
}

TEST(JointGfTest, DisplayedJointForm) {
  const std::vector<std::string> v{"x", "X1", "X2"};
  auto rename = [&](std::string s) {
    std::string out;
    for (char c : s) {
      if (c == 'X') out += "X1";
      else if (c == 'Y') out += "X2";
      else out += c;
    }
    return out;
  };
  const RationalFunction expected(P(rename(std::string(reference::kJointNumC)), v),
                                  P(rename(std::string(reference::kJointDenC)), v));
  EXPECT_EQ(joint_gf(PatternSet::parse(reference::kSetC)), expected);
}

TEST(JointGfTest, MarkerSpecializations) {
  for (const char* text : {"2,3,2", "2,3,4;4,3,2", "1,2;2,1", "4"}) {
    const auto ps = PatternSet::parse(text);
    RationalFunction at_one = joint_gf(ps);
    RationalFunction at_zero = at_one;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      at_one = at_one.substitute(marker_name(i), RationalFunction::constant(1));
      at_zero = at_zero.substitute(marker_name(i), RationalFunction::constant(0));
    }
    EXPECT_EQ(plain_x_gf(at_one), all_compositions_gf()) << text;
    EXPECT_EQ(plain_x_gf(at_zero), plain_x_gf(avoider_gf(ps).F)) << text;
  }
}

TEST(JointGfTest, CoefficientsMatchOracle) {
  for (const char* text : {"2,3,2", "1,2;2,2", "2,1;1,3"}) {
    const auto ps = PatternSet::parse(text);
    const auto joint = joint_gf(ps);
    const auto coeffs = series_coefficients_multivariate(joint, 12, "x");
    for (unsigned n = 0; n <= 12; ++n) {
      const auto counts = testing::naive_joint(static_cast<int>(n), testing::to_parts(ps));
      std::size_t terms = 0;
      for (const auto& [occ, count] : counts) {
        Polynomial::Exponents e(coeffs[n].vars().size(), 0);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          e[*coeffs[n].var_index(marker_name(i))] = static_cast<std::uint32_t>(occ[i]);
        }
        const auto it = coeffs[n].terms().find(e);
        ASSERT_NE(it, coeffs[n].terms().end()) << text << " n=" << n;
        EXPECT_EQ(it->second, BigRational(static_cast<unsigned long>(count)));
        ++terms;
      }
      EXPECT_EQ(coeffs[n].term_count(), terms) << text << " n=" << n;
    }
  }
}

TEST(AvoiderGfTest, SeriesMatchesOracleOnFixedSets) {
  for (const char* text : {"2,3,2", "1,2;2,1", "1,1,2", "3", "2,2;1,3", "3,1,2;2,1,3;1,1,1"}) {
    const auto ps = PatternSet::parse(text);
    const auto s = series(ps, 14);
    for (unsigned n = 0; n <= 14; ++n) {
      EXPECT_EQ(s[n], BigRational(static_cast<unsigned long>(
                          testing::naive_avoiders(static_cast<int>(n), testing::to_parts(ps)))))
          << text << " n=" << n;
    }
  }
}

TEST(AvoiderGfTest, EmptySetCountsEverything) {
  EXPECT_EQ(plain_x_gf(avoider_gf(PatternSet()).F), all_compositions_gf());
}

TEST(AvoiderGfTest, SinglePartGivesMultiBonacci) {
  for (int k = 2; k <= 6; ++k) {
    Polynomial den = P("1");
    for (int e = 1; e < k; ++e) den -= P("x^" + std::to_string(e));
    const auto f = avoider_gf(PatternSet::parse(std::to_string(k))).F;
    EXPECT_EQ(plain_x_gf(f), RationalFunction(P("1"), den)) << k;
  }
}

TEST(AvoiderGfTest, ReversalInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto parts = testing::random_pattern_set(rng, 3, 1 + static_cast<int>(rng() % 2), 3);
    const auto ps = testing::to_pattern_set(parts);
    EXPECT_EQ(avoider_gf(ps).F, avoider_gf(ps.reversed()).F) << ps.to_string();
  }
}

TEST(AvoiderGfTest, PowersOfTwoBelowMinimalSum) {
  for (const char* text : {"3,4,5,4,3", "2,5,2;3,4,3;4,2,4", "2,3,4;4,3,2", "2,2"}) {
    const auto ps = PatternSet::parse(text);
    const auto s = series(ps, static_cast<std::size_t>(ps.min_sum()));
    for (long n = 1; n < ps.min_sum(); ++n) {
      EXPECT_EQ(s[static_cast<std::size_t>(n)], BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(n - 1)));
    }
    const long m = ps.min_sum();
    EXPECT_LT(s[static_cast<std::size_t>(m)], BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(m - 1)));
  }
}

// The closure of merge_state agrees with stacking violations by hand, state
// by state, through the width bound.
TEST(ClusterClosureTest, MatchesExplicitStacking) {
  int checked = 0;
  for (int a = 1; a <= 3; ++a) {
    std::vector<Parts> all;
    Parts cur(static_cast<std::size_t>(a), 1);
    while (true) {
      all.push_back(cur);
      std::size_t k = 0;
      while (k < cur.size() && cur[k] == 3) cur[k++] = 1;
      if (k == cur.size()) break;
      ++cur[k];
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i; j < all.size(); ++j) {
        std::vector<Parts> set{all[i]};
        if (j != i) set.push_back(all[j]);
        const int width = a == 1 ? 1 : 3 * a + 1;
        const auto sys = build_system(testing::to_pattern_set(set), Mode::plain);
        EXPECT_EQ(testing::iterate_system(sys, width), testing::explicit_clusters(set, width))
            << testing::to_pattern_set(set).to_string();
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 6 + 45 + 378);
}

}  // namespace
}  // namespace compclust
