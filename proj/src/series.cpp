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

#include "compclust/series.hpp"

#include <algorithm>

#include "compclust/errors.hpp"
#include "compclust/univariate.hpp"

namespace compclust {

bool SeriesPrefix::all_nonnegative_integers() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const BigRational& c) { return c >= 0 && is_integer(c); });
}

SeriesPrefix series_coefficients(const RationalFunction& f, std::size_t N,
                                 std::string_view var) {
  auto sole = f.sole_variable();
  if (!sole || (!sole->empty() && *sole != var)) {
    throw DomainError("series_coefficients expects a function of '" +
                      std::string(var) + "' alone");
  }
  const upoly::Dense p = upoly::from_polynomial(f.num(), var);
  const upoly::Dense q = upoly::from_polynomial(f.den(), var);
  if (q.empty() || q[0] == 0) {
    throw DomainError("denominator vanishes at 0: the series has a pole there");
  }

  // With integer data and q0 = ±1 the recurrence stays in Z; otherwise run
  // it over Q. Both paths share the same arithmetic shape.
  const bool integral =
      std::all_of(p.begin(), p.end(), [](const auto& c) { return is_integer(c); }) &&
      std::all_of(q.begin(), q.end(), [](const auto& c) { return is_integer(c); }) &&
      (q[0] == 1 || q[0] == -1);

  SeriesPrefix out;
  out.coefficients.reserve(N + 1);
  if (integral) {
    std::vector<BigInt> pi(p.size()), qi(q.size()), a;
    for (std::size_t i = 0; i < p.size(); ++i) pi[i] = p[i].get_num();
    for (std::size_t i = 0; i < q.size(); ++i) qi[i] = q[i].get_num();
    a.reserve(N + 1);
    BigInt acc;
    for (std::size_t n = 0; n <= N; ++n) {
      acc = n < pi.size() ? pi[n] : BigInt(0);
      const std::size_t top = std::min(n, qi.size() - 1);
      for (std::size_t i = 1; i <= top; ++i) {
        if (qi[i] != 0) acc -= qi[i] * a[n - i];
      }
      if (qi[0] < 0) acc = -acc;
      a.push_back(acc);
      out.coefficients.emplace_back(acc);
    }
    return out;
  }

  for (std::size_t n = 0; n <= N; ++n) {
    BigRational acc = n < p.size() ? p[n] : BigRational(0);
    const std::size_t top = std::min(n, q.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      if (q[i] != 0) acc -= q[i] * out.coefficients[n - i];
    }
    out.coefficients.push_back(acc / q[0]);
  }
  return out;
}

std::vector<Polynomial> series_coefficients_multivariate(
    const RationalFunction& f, std::size_t N, std::string_view var) {
  auto p = f.num().coefficients_in(var);
  auto q = f.den().coefficients_in(var);
  if (q.empty() || q[0].is_zero() || !q[0].is_constant()) {
    throw DomainError("denominator's constant part in '" + std::string(var) +
                      "' must be a nonzero constant");
  }
  const BigRational q0 = q[0].constant_term();
  const BigRational inv = 1 / q0;
  const auto& vars = f.vars();
  std::vector<Polynomial> out;
  out.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Polynomial acc = n < p.size() ? p[n] : Polynomial(vars);
    const std::size_t top = std::min(n, q.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) {
      if (!q[i].is_zero() && !out[n - i].is_zero()) acc -= q[i] * out[n - i];
    }
    out.push_back(acc.scaled(inv));
  }
  return out;
}

SeriesPrefix cauchy_product(const SeriesPrefix& a, const SeriesPrefix& b) {
  const std::size_t len = std::min(a.size(), b.size());
  SeriesPrefix out;
  out.coefficients.assign(len, BigRational(0));
  for (std::size_t n = 0; n < len; ++n) {
    for (std::size_t i = 0; i <= n; ++i) out.coefficients[n] += a[i] * b[n - i];
  }
  return out;
}

}  // namespace compclust
