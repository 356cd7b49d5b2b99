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

#include "compclust/linear_solve.hpp"

#include <utility>

#include "compclust/errors.hpp"

namespace compclust {

std::vector<RationalFunction> FractionFreeSolution::values() const {
  std::vector<RationalFunction> out;
  out.reserve(numerators.size());
  for (const auto& y : numerators) out.emplace_back(y, denominator);
  return out;
}

RationalFunction FractionFreeSolution::sum() const {
  Polynomial total(denominator.vars());
  for (const auto& y : numerators) total += y;
  return RationalFunction(total, denominator);
}

FractionFreeSolution solve_fraction_free(const PolyMatrix& m,
                                         const std::vector<Polynomial>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DomainError("right-hand side size mismatch");
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("matrix is not square");
  }
  if (n == 0) return {{}, Polynomial::constant(1)};

  std::vector<std::string> vars;
  for (const auto& row : m) {
    for (const auto& p : row) vars = merge_vars(vars, p.vars());
  }
  for (const auto& p : rhs) vars = merge_vars(vars, p.vars());

  // Augmented working copy [M | rhs].
  std::vector<std::vector<Polynomial>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m[i][j].with_vars(vars));
    a[i].push_back(rhs[i].with_vars(vars));
  }

  Polynomial prev = Polynomial::constant(1, vars);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (best == n || a[i][k].term_count() < a[best][k].term_count()) best = i;
    }
    if (best == n) {
      throw SingularSystemError("singular system: pivot vanishes in column " +
                                std::to_string(k));
    }
    std::swap(a[k], a[best]);
    const Polynomial& pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial factor = a[i][k];
      for (std::size_t j = k + 1; j <= n; ++j) {
        Polynomial v = pivot * a[i][j];
        if (!factor.is_zero() && !a[k][j].is_zero()) v -= factor * a[k][j];
        a[i][j] = v.exact_quotient(prev);
      }
      a[i][k] = Polynomial(vars);
    }
    prev = pivot;
  }

  FractionFreeSolution sol;
  sol.denominator = a[n - 1][n - 1];
  sol.numerators.assign(n, Polynomial(vars));
  for (std::size_t i = n; i-- > 0;) {
    Polynomial acc = sol.denominator * a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!a[i][j].is_zero()) acc -= a[i][j] * sol.numerators[j];
    }
    sol.numerators[i] = acc.exact_quotient(a[i][i]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Polynomial lhs(vars);
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_zero()) lhs += m[i][j].with_vars(vars) * sol.numerators[j];
    }
    if (!(lhs == sol.denominator * rhs[i].with_vars(vars))) {
      throw VerificationError("back-substitution check failed in row " +
                              std::to_string(i));
    }
  }
  return sol;
}

std::vector<RationalFunction> solve_linear_system(
    const PolyMatrix& m, const std::vector<Polynomial>& rhs) {
  return solve_fraction_free(m, rhs).values();
}

}  // namespace compclust
