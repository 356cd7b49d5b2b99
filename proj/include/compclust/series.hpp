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
#include <string_view>
#include <vector>

#include "compclust/bigrational.hpp"
#include "compclust/polynomial.hpp"
#include "compclust/rational_function.hpp"

namespace compclust {

// Maclaurin coefficients a(0..N); index = power of the series variable.
struct SeriesPrefix {
  std::vector<BigRational> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  const BigRational& operator[](std::size_t n) const { return coefficients[n]; }
  bool all_nonnegative_integers() const;
};

// Coefficients 0..N of a function of `var` alone, by the denominator
// recurrence q0·a(n) = p(n) − Σ_{i≥1} q_i·a(n−i). Throws DomainError when
// the denominator vanishes at 0 or another variable occurs.
SeriesPrefix series_coefficients(const RationalFunction& f, std::size_t N,
                                 std::string_view var = "x");

// Same recurrence when the other variables are kept symbolic: coefficient n
// is a polynomial in the remaining variables. Requires the var^0 part of the
// denominator to be a nonzero constant.
std::vector<Polynomial> series_coefficients_multivariate(
    const RationalFunction& f, std::size_t N, std::string_view var = "x");

// Cauchy product of two prefixes, truncated to the shorter length.
SeriesPrefix cauchy_product(const SeriesPrefix& a, const SeriesPrefix& b);

}  // namespace compclust
