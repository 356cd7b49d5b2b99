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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compclust/bigrational.hpp"
#include "compclust/composition.hpp"
#include "compclust/rational_function.hpp"
#include "compclust/univariate.hpp"

// Occurrence statistics over the uniform distribution on compositions of n.
//
// Every mixed factorial moment E[(N_i)_p (N_j)_q](n) equals
// p!·q!·[x^n]F_pq(x) / 2^(n-1), where F_pq is the coefficient of U_i^p U_j^q
// in the joint generating function (U = X - 1, other markers at U = 0).
// F_pq has a pole of order m at x = 1/2 and its principal part there gives a
// polynomial P of degree m-1 in n with
//
//     E[(N_i)_p (N_j)_q](n) = 2·p!·q!·P(n) + (exponentially small),
//
// so the moment polynomials below are exact up to terms that vanish
// geometrically. They are not, in general, equal to the moments at any
// finite n; MomentCheck records how far they are on the window.
namespace compclust {

// Dense polynomial in n: index k holds the coefficient of n^k.
using NPolynomial = upoly::Dense;

std::string npoly_to_string(const NPolynomial& p);
BigRational npoly_evaluate(const NPolynomial& p, std::size_t n);

// Verification window. start = 0 means 4a; the start is raised if needed
// so the residual recurrence holds from the first point on.
struct MomentWindow {
  std::size_t start = 0;
  std::size_t length = 16;
};

// Polynomial fit of one statistic against its exact per-n values.
struct MomentCheck {
  NPolynomial polynomial;
  std::size_t window_start = 0;
  std::size_t window_end = 0;
  // True when the exact value equals the polynomial at every window point.
  bool exact_on_window = false;
  // max |exact - polynomial| over the window.
  BigFloat max_residual;
};

class MomentEngine {
 public:
  // Statistics of N_i and N_j (i == j allowed: then only N_i is tracked and
  // q-indices fold into p). `order` bounds p + q.
  MomentEngine(const PatternSet& patterns, std::size_t i, std::size_t j, int order);
  // Shares an already computed F(x; U1..Ur).
  MomentEngine(const RationalFunction& shifted_joint, std::size_t pattern_length,
               std::size_t i, std::size_t j, int order);

  int order() const noexcept { return order_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  bool single() const noexcept { return i_ == j_; }
  std::size_t pattern_length() const noexcept { return length_; }

  // [U_i^p U_j^q] F(x; U), lowest terms.
  const RationalFunction& taylor_gf(int p, int q) const;

  // Asymptotic polynomials (exact rationals).
  const NPolynomial& factorial_polynomial(int p, int q) const;
  NPolynomial raw_polynomial(int p, int q) const;
  NPolynomial central_polynomial(int p, int q) const;

  // Exact values at size n >= 1.
  BigRational factorial_moment(int p, int q, std::size_t n) const;
  BigRational raw_moment(int p, int q, std::size_t n) const;
  BigRational central_moment(int p, int q, std::size_t n) const;

  // Checks that [x^n]F_pq - 2^n·P(n) satisfies the recurrence of the
  // remaining denominator on the window; throws VerificationError otherwise.
  // Returns the window actually used.
  std::pair<std::size_t, std::size_t> verify(int p, int q, const MomentWindow& window) const;

  // Smallest n from which the residual recurrence is guaranteed for (p, q).
  std::size_t recurrence_start(int p, int q) const;

  // Window start actually used: max(requested or 4a, every recurrence start
  // up to the engine's order).
  std::size_t window_start(const MomentWindow& window) const;

  // Checks a statistic's polynomial against exact values on the window.
  MomentCheck check(const NPolynomial& polynomial,
                    const std::function<BigRational(std::size_t)>& exact,
                    const MomentWindow& window) const;

 private:
  struct Entry {
    RationalFunction gf;
    NPolynomial poly;
    // Denominator with the (1-2x)^m factor removed.
    upoly::Dense rest;
    std::size_t start = 0;
    mutable std::vector<BigRational> coefficients;
  };

  void build(const RationalFunction& shifted_joint);
  const Entry& entry(int p, int q) const;
  const BigRational& coefficient(const Entry& e, std::size_t n) const;

  std::size_t i_, j_;
  std::size_t length_;
  int order_;
  std::map<std::pair<int, int>, Entry> entries_;
};

struct PairStatistics {
  std::size_t i = 0, j = 0;
  MomentCheck covariance;
  // Slope ratio cov / sqrt(var_i·var_j); exact when that is rational.
  std::optional<BigRational> correlation;
  BigFloat correlation_value;
};

struct NormalityRow {
  int p = 0, q = 0;
  BigFloat empirical;  // standardized mixed moment at size n
  BigFloat target;     // bivariate normal moment with the asymptotic ρ
  BigFloat gap;        // |empirical - target|
};

struct NormalityTable {
  std::size_t i = 0, j = 0;
  std::size_t n = 0;
  BigFloat rho;
  std::vector<NormalityRow> rows;
};

struct MomentReport {
  PatternSet patterns;
  int order = 0;
  std::vector<MomentCheck> expectation;  // per pattern
  std::vector<MomentCheck> variance;     // per pattern
  std::vector<PairStatistics> pairs;     // i < j
  std::optional<NormalityTable> normality;
};

struct MomentOptions {
  int order = 6;
  MomentWindow window;
  // Size at which the report's normality table is evaluated; 0 skips it.
  std::size_t normality_n = 200;
};

MomentReport moments(const PatternSet& patterns, const MomentOptions& options = {});

// E[U^p V^q] for standard bivariate normal (U, V) with correlation ρ, as a
// polynomial in ρ (index k = coefficient of ρ^k).
upoly::Dense bivariate_normal_polynomial(int p, int q);
BigRational bivariate_normal_moment(int p, int q, const BigRational& rho);
BigFloat bivariate_normal_moment(int p, int q, const BigFloat& rho);

// Standardized mixed moments of (N_i, N_j) at size n for p + q <= order,
// against bivariate normal targets with the asymptotic correlation.
NormalityTable normality_check(const PatternSet& patterns, std::size_t i, std::size_t j,
                               int order, std::size_t n);
NormalityTable normality_check(const MomentEngine& engine, std::size_t n);

// Slope ratio of the asymptotic covariance and variances of the engine's pair.
PairStatistics pair_statistics(const MomentEngine& engine, const MomentWindow& window);

// Exact square root of a nonnegative rational, when it has one.
std::optional<BigRational> rational_sqrt(const BigRational& q);

}  // namespace compclust
