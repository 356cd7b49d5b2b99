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

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "compclust/analysis.hpp"
#include "compclust/errors.hpp"
#include "compclust/moments.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"
#include "support.hpp"

namespace compclust {
namespace {

double to_double(const BigFloat& v) { return v.get_d(); }

BigRational Q(std::string_view text) { return parse_rational(text); }

TEST(SeriesTest, ReferencePrefixes) {
  const auto a = series(PatternSet::parse(reference::kSetA), 30);
  const auto b = series(PatternSet::parse(reference::kSetB), 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    EXPECT_EQ(a[n], BigRational(static_cast<unsigned long>(reference::kSeriesA[n]))) << n;
    EXPECT_EQ(b[n], BigRational(static_cast<unsigned long>(reference::kSeriesB[n]))) << n;
  }
}

TEST(GrowthTest, ReferenceConstants) {
  const struct {
    std::string_view set;
    double lambda, amplitude;
  } cases[] = {{reference::kSetA, reference::kLambdaA, reference::kAmplitudeA},
               {reference::kSetB, reference::kLambdaB, reference::kAmplitudeB},
               {reference::kSetC, reference::kLambdaC, reference::kAmplitudeC}};
  for (const auto& c : cases) {
    const auto est = growth(PatternSet::parse(c.set));
    EXPECT_EQ(est.status, GrowthStatus::ok) << c.set;
    EXPECT_NEAR(to_double(est.lambda_value), c.lambda, 1e-9) << c.set;
    ASSERT_TRUE(est.amplitude_value.has_value());
    EXPECT_NEAR(to_double(*est.amplitude_value), c.amplitude, 1e-9) << c.set;
    EXPECT_LT(est.amplitude_error, 1e-6);
  }
}

TEST(GrowthTest, GoldenRatioDigits) {
  GrowthOptions options;
  options.digits = 19;
  const auto est = growth(PatternSet::parse("3"), options);
  EXPECT_EQ(est.lambda, "1.6180339887498948482");
  EXPECT_EQ(est.digits, 19);
}

TEST(GrowthTest, SubexponentialAndDegenerate) {
  const auto est = growth(PatternSet::parse("1,1,2"));
  EXPECT_EQ(est.status, GrowthStatus::subexponential);
  EXPECT_FALSE(est.amplitude.has_value());
  EXPECT_EQ(to_double(est.lambda_value), 1.0);
  // Avoiding [1] leaves only the empty composition: no denominator root.
  EXPECT_THROW(growth(PatternSet::parse("1")), DomainError);
}

TEST(GrowthTest, DoublePoleIsFlagged) {
  const RationalFunction f(parse_polynomial("1"), parse_polynomial("1 - 4*x + 4*x^2"));
  EXPECT_EQ(growth(f).status, GrowthStatus::non_simple);
}

TEST(GrowthTest, CompetingSingularityIsFlagged) {
  // 1/((1-2x)(1+2x)): a(n) alternates between 0 and 2^n.
  const RationalFunction f(parse_polynomial("1"), parse_polynomial("1 - 4*x^2"));
  EXPECT_EQ(growth(f).status, GrowthStatus::non_dominant);
}

TEST(RankTest, SumFourRow) {
  const auto table = rank_patterns(4, 10, 2);
  ASSERT_EQ(table.groups.size(), 3u);
  const auto& g = table.groups.back();
  EXPECT_EQ(g.sum, 4);
  std::vector<std::string> names;
  for (const auto& row : g.rows) {
    ASSERT_FALSE(row.error.has_value()) << *row.error;
    names.push_back(row.pattern.to_compact_string());
  }
  // 31 folds into 13 and 211 into 112; 121 and 1111 stay as their own classes.
  EXPECT_EQ(names.size(), 6u);
  EXPECT_EQ(names.back(), "4");
  EXPECT_EQ(g.rows.back().estimate.lambda, "1.8392867552");
}

TEST(RankTest, WorkerCountDoesNotChangeTable) {
  const auto one = rank_patterns(6, 10, 1);
  const auto many = rank_patterns(6, 10, 8);
  ASSERT_EQ(one.groups.size(), many.groups.size());
  for (std::size_t g = 0; g < one.groups.size(); ++g) {
    ASSERT_EQ(one.groups[g].rows.size(), many.groups[g].rows.size());
    for (std::size_t r = 0; r < one.groups[g].rows.size(); ++r) {
      EXPECT_EQ(one.groups[g].rows[r].pattern, many.groups[g].rows[r].pattern);
      EXPECT_EQ(one.groups[g].rows[r].estimate.lambda, many.groups[g].rows[r].estimate.lambda);
    }
  }
}

TEST(WickTest, MatchesPairingCount) {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      const auto want = testing::wick_by_pairings(p, q);
      upoly::Dense got = bivariate_normal_polynomial(p, q);
      upoly::trim(got);
      ASSERT_EQ(got.size(), want.size()) << p << "," << q;
      for (std::size_t k = 0; k < want.size(); ++k) {
        EXPECT_EQ(got[k], BigRational(want[k])) << p << "," << q << " rho^" << k;
      }
    }
  }
  EXPECT_EQ(bivariate_normal_moment(0, 2, BigRational(1, 3)), 1);
  EXPECT_EQ(bivariate_normal_moment(2, 2, BigRational(1, 2)), BigRational(3, 2));
  EXPECT_EQ(bivariate_normal_moment(3, 0, BigRational(1, 2)), 0);
}

TEST(MomentsTest, ExactValuesMatchOracleCounts) {
  const auto ps = PatternSet::parse("2,3,4;4,3,2");
  const MomentEngine engine(ps, 0, 1, 4);
  for (int n = 1; n <= 14; ++n) {
    const auto counts = testing::naive_joint(n, testing::to_parts(ps));
    const BigRational total(BigInt(1) << (n - 1));
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; p + q <= 4; ++q) {
        BigRational want(0);
        for (const auto& [occ, count] : counts) {
          BigInt ff(static_cast<unsigned long>(count));
          for (int k = 0; k < p; ++k) ff *= static_cast<long>(occ[0]) - k;
          for (int k = 0; k < q; ++k) ff *= static_cast<long>(occ[1]) - k;
          want += BigRational(ff);
        }
        want /= total;
        EXPECT_EQ(engine.factorial_moment(p, q, static_cast<std::size_t>(n)), want)
            << "n=" << n << " p=" << p << " q=" << q;
      }
    }
  }
}

TEST(MomentsTest, TwoPatternStatistics) {
  const auto report = moments(PatternSet::parse(reference::kSetC));
  ASSERT_EQ(report.expectation.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& e = report.expectation[i].polynomial;
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[1], Q("1/128"));
    EXPECT_EQ(e[0], Q("-9/128"));
    // Exact values carry a 2^(1-n) correction on top of the polynomial.
    EXPECT_FALSE(report.expectation[i].exact_on_window);
    const auto& v = report.variance[i].polynomial;
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[1], Q(reference::kVarianceSlopeC));
    EXPECT_EQ(v[0], Q(reference::kVarianceInterceptC));
  }
  ASSERT_EQ(report.pairs.size(), 1u);
  ASSERT_TRUE(report.pairs[0].correlation.has_value());
  EXPECT_EQ(*report.pairs[0].correlation, Q(reference::kCorrelationC));
  const auto& cov = report.pairs[0].covariance.polynomial;
  ASSERT_EQ(cov.size(), 2u);
  EXPECT_EQ(cov[1], Q("71/16384"));
}

TEST(MomentsTest, ExpectationCorrectionIsExact) {
  const MomentEngine engine(PatternSet::parse(reference::kSetC), 0, 1, 2);
  for (std::size_t n = 12; n <= 60; ++n) {
    const BigRational want = BigRational(static_cast<long>(n) - 9, 128) +
                             BigRational(1) / BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(n - 1));
    EXPECT_EQ(engine.raw_moment(1, 0, n), want) << n;
  }
}

TEST(MomentsTest, VerifyChecksRecurrence) {
  const MomentEngine engine(PatternSet::parse("2,3,2"), 0, 0, 4);
  for (int p = 0; p <= 4; ++p) EXPECT_NO_THROW(engine.verify(p, 0, MomentWindow{}));
  EXPECT_THROW(engine.verify(1, 0, MomentWindow{0, 7}), DomainError);
  EXPECT_THROW(engine.factorial_polynomial(1, 1), DomainError);
  EXPECT_THROW(engine.factorial_polynomial(5, 0), DomainError);
}

TEST(MomentsTest, RationalSqrt) {
  EXPECT_EQ(*rational_sqrt(Q("49/16")), Q("7/4"));
  EXPECT_FALSE(rational_sqrt(Q("2")).has_value());
  EXPECT_FALSE(rational_sqrt(Q("-4")).has_value());
}

TEST(NormalityTest, TableShape) {
  const auto table = normality_check(PatternSet::parse(reference::kSetC), 0, 1, 4, 200);
  EXPECT_EQ(table.n, 200u);
  for (const auto& row : table.rows) {
    if ((row.p == 2 && row.q == 0) || (row.p == 0 && row.q == 2)) {
      EXPECT_LT(to_double(row.gap), 1e-30);
    }
    if (row.p == 4 && row.q == 0) EXPECT_EQ(to_double(row.target), 3.0);
    if (row.p == 1 && row.q == 1) EXPECT_NEAR(to_double(row.target), 71.0 / 147.0, 1e-15);
  }
}

}  // namespace
}  // namespace compclust
