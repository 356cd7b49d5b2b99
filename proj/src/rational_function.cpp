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

#include "compclust/rational_function.hpp"

#include <algorithm>

#include "compclust/errors.hpp"
#include "compclust/univariate.hpp"

namespace compclust {

namespace {

// Multiplies by the lcm of coefficient denominators and divides by the gcd
// of the resulting integer numerators, over both polynomials at once.
void remove_joint_content(Polynomial& a, Polynomial& b) {
  BigInt lcm_den = 1;
  for (const auto* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  BigInt content = 0;
  for (const auto* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      BigInt v = c.get_num() * (lcm_den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  }
  if (content == 0) return;
  BigRational factor = make_rational(lcm_den, content);
  if (factor != 1) {
    a = a.scaled(factor);
    b = b.scaled(factor);
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(1, num_.vars())) {
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFunction RationalFunction::constant(const BigRational& c) {
  return RationalFunction(Polynomial::constant(c));
}

RationalFunction RationalFunction::variable(std::string_view name) {
  return RationalFunction(Polynomial::variable(name));
}

std::vector<std::string> RationalFunction::used_vars() const {
  auto used = merge_vars(num_.used_vars(), den_.used_vars());
  std::vector<std::string> ordered;
  for (const auto& v : vars()) {
    if (std::find(used.begin(), used.end(), v) != used.end()) ordered.push_back(v);
  }
  return ordered;
}

std::optional<std::string> RationalFunction::sole_variable() const {
  auto used = used_vars();
  if (used.empty()) return std::string();
  if (used.size() == 1) return used.front();
  return std::nullopt;
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.vars() != den_.vars()) {
    auto [n, d] = unify(num_, den_);
    num_ = std::move(n);
    den_ = std::move(d);
  }
  const auto& vars = num_.vars();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1, vars);
    return;
  }

  // Common monomial factor.
  auto mn = num_.min_exponents();
  auto md = den_.min_exponents();
  Polynomial::Exponents common(vars.size());
  bool any = false;
  for (std::size_t i = 0; i < common.size(); ++i) {
    common[i] = std::min(mn[i], md[i]);
    any = any || common[i] > 0;
  }
  if (any) {
    num_ = num_.shifted_down(common);
    den_ = den_.shifted_down(common);
  }

  if (auto sole = sole_variable(); sole && !sole->empty()) {
    auto n = upoly::from_polynomial(num_, *sole);
    auto d = upoly::from_polynomial(den_, *sole);
    auto g = upoly::gcd(n, d);
    if (upoly::degree(g) > 0) {
      n = upoly::divmod(n, g).first;
      d = upoly::divmod(d, g).first;
      num_ = upoly::to_polynomial(n, *sole).with_vars(vars);
      den_ = upoly::to_polynomial(d, *sole).with_vars(vars);
    }
  } else if (!den_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(1, vars);
    }
  }

  remove_joint_content(num_, den_);
  if (den_.trailing_term().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) {
    return RationalFunction(Polynomial(merge_vars(a.vars(), b.vars())));
  }
  // Cancel identical cross factors before multiplying out.
  if (a.num_ == b.den_) return RationalFunction(b.num_, a.den_);
  if (b.num_ == a.den_) return RationalFunction(a.num_, b.den_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::substitute(std::string_view var,
                                              const RationalFunction& g) const {
  if (!num_.var_index(var)) return *this;
  const std::uint32_t d = std::max(num_.degree(var), den_.degree(var));
  if (d == 0) {
    std::vector<std::string> kept;
    for (const auto& v : vars()) {
      if (v != var) kept.push_back(v);
    }
    return RationalFunction(num_.with_vars(kept), den_.with_vars(kept));
  }
  // P(a/b)·b^d = Σ p_k a^k b^(d-k), likewise for Q.
  std::vector<Polynomial> a_pows{Polynomial::constant(1, g.num().vars())};
  std::vector<Polynomial> b_pows{Polynomial::constant(1, g.den().vars())};
  for (std::uint32_t k = 1; k <= d; ++k) {
    a_pows.push_back(a_pows.back() * g.num());
    b_pows.push_back(b_pows.back() * g.den());
  }
  auto expand = [&](const Polynomial& p) {
    auto coeffs = p.coefficients_in(var);
    Polynomial acc;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      acc += coeffs[k] * a_pows[k] * b_pows[d - k];
    }
    return acc;
  };
  Polynomial num = expand(num_);
  Polynomial den = expand(den_);
  if (den.is_zero()) {
    throw DomainError("substitution makes the denominator vanish identically");
  }
  auto vars_out = merge_vars(vars(), g.vars());
  if (!g.num().var_index(var) && !g.den().var_index(var)) {
    std::vector<std::string> kept;
    for (const auto& v : vars_out) {
      if (v != var) kept.push_back(v);
    }
    vars_out = std::move(kept);
  }
  return RationalFunction(num.with_vars(vars_out), den.with_vars(vars_out));
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
  Polynomial dn = num_.derivative(var);
  Polynomial dd = den_.derivative(var);
  if (dd.is_zero()) return RationalFunction(dn, den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_arith(const RationalFunction& f,
                              const RationalFunction& g, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
    case ArithOp::div:
      return f / g;
  }
  throw DomainError("unknown arithmetic operation");
}

}  // namespace compclust
