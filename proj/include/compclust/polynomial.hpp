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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compclust/bigrational.hpp"

namespace compclust {

// Sparse multivariate polynomial over the rationals.
//
// A polynomial carries its own ordered variable list; exponent vectors are
// indexed by position in that list. Terms are kept in ascending
// lexicographic order of exponent vectors (first variable most significant),
// which is also the display order: `1 - 2*x + x^2`. Binary operations on
// polynomials with different variable lists first lift both operands onto
// the union list (left operand's order, then the right operand's new names).
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, BigRational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);
  Polynomial(std::vector<std::string> vars, TermMap terms);

  static Polynomial constant(const BigRational& c,
                             std::vector<std::string> vars = {});
  static Polynomial variable(std::string_view name,
                             std::vector<std::string> vars = {});
  static Polynomial monomial(const BigRational& c, Exponents exps,
                             std::vector<std::string> vars);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;

  std::optional<std::size_t> var_index(std::string_view name) const;
  std::uint32_t degree(std::string_view name) const;
  std::uint32_t total_degree() const;
  // Variables that appear with a positive exponent somewhere.
  std::vector<std::string> used_vars() const;

  // Re-expresses the polynomial over `vars`. Throws DomainError if a used
  // variable is missing from `vars`.
  Polynomial with_vars(std::vector<std::string> vars) const;
  // Drops variables that do not occur.
  Polynomial trimmed() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const BigRational& factor) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::string_view var) const;

  // Polynomial composition: every occurrence of `var` replaced by `value`.
  Polynomial substitute(std::string_view var, const Polynomial& value) const;

  // Coefficients by power of `var`: result[k] is the coefficient of var^k,
  // expressed over the same variable list (var's exponent is zero).
  std::vector<Polynomial> coefficients_in(std::string_view var) const;

  // Exact division; nullopt when `divisor` does not divide *this.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  // Same, throwing VerificationError on a nonzero remainder.
  Polynomial exact_quotient(const Polynomial& divisor) const;

  // Lexicographically largest term (the division leading term).
  std::pair<Exponents, BigRational> leading_term() const;
  // Lexicographically smallest term; its coefficient is the one the
  // normalization of rational functions keeps positive.
  std::pair<Exponents, BigRational> trailing_term() const;

  // Componentwise minimum of all exponent vectors (zero polynomial: zeros).
  Exponents min_exponents() const;
  Polynomial shifted_down(const Exponents& exps) const;

  // Evaluates with every variable bound; `values` follows vars().
  BigRational evaluate(std::span<const BigRational> values) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Exponents& e, const BigRational& c);
  void check_exponents(const Exponents& e) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Union of both variable lists, `a`'s names first.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Lifts both operands onto merge_vars(a.vars(), b.vars()).
std::pair<Polynomial, Polynomial> unify(const Polynomial& a,
                                        const Polynomial& b);

// Parses plain polynomial text: "-1+x^12-2*x^11+3/4*x*X^2". No
// parentheses. Variables are identifiers; they are appended to `vars` in
// order of first appearance.
Polynomial parse_polynomial(std::string_view text,
                            std::vector<std::string> vars = {});

}  // namespace compclust
