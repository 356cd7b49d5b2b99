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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compclust/polynomial.hpp"

namespace compclust {

// num/den over Q, both polynomials sharing one variable list.
//
// Normal form (applied by every constructor and operation):
//   * integer content removed from num and den jointly;
//   * common monomial factors cancelled;
//   * when at most one variable occurs, num and den are coprime (GCD);
//   * otherwise, if den divides num the quotient is taken;
//   * den's first term in display order (its constant term when present) is
//     positive.
// There is no multivariate GCD, so two equal functions may have different
// representations; operator== compares by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial p);  // NOLINT: polynomials embed implicitly
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const BigRational& c);
  static RationalFunction variable(std::string_view name);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  const std::vector<std::string>& vars() const noexcept { return num_.vars(); }
  std::vector<std::string> used_vars() const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  // Sole variable when the function involves at most one; nullopt otherwise.
  // A constant reports the empty string.
  std::optional<std::string> sole_variable() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction reciprocal() const;

  // Composition f(var := g). Throws DomainError if the substituted
  // denominator vanishes identically.
  RationalFunction substitute(std::string_view var, const RationalFunction& g) const;
  RationalFunction derivative(std::string_view var) const;

  // Cross-multiplication equality: num·o.den == o.num·den.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  // "num" when den == 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

RationalFunction ratfun_arith(const RationalFunction& f,
                              const RationalFunction& g, ArithOp op);

}  // namespace compclust
