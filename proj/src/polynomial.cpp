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

#include "compclust/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "compclust/errors.hpp"

namespace compclust {

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    check_exponents(e);
    if (c != 0) terms_.emplace(e, c);
  }
}

Polynomial Polynomial::constant(const BigRational& c,
                                std::vector<std::string> vars) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::string_view name,
                                std::vector<std::string> vars) {
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
    vars.emplace_back(name);
  }
  Polynomial p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[*p.var_index(name)] = 1;
  p.terms_.emplace(std::move(e), BigRational(1));
  return p;
}

Polynomial Polynomial::monomial(const BigRational& c, Exponents exps,
                                std::vector<std::string> vars) {
  Polynomial p(std::move(vars));
  p.check_exponents(exps);
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

void Polynomial::check_exponents(const Exponents& e) const {
  if (e.size() != vars_.size()) {
    throw DomainError("exponent vector length does not match variable count");
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

BigRational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::optional<std::size_t> Polynomial::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::uint32_t Polynomial::degree(std::string_view name) const {
  auto idx = var_index(name);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::string> Polynomial::used_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

Polynomial Polynomial::with_vars(std::vector<std::string> vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> target(vars_.size());
  std::vector<bool> present(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) {
      target[i] = static_cast<std::size_t>(it - vars.begin());
      present[i] = true;
    }
  }
  Polynomial out(std::move(vars));
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!present[i]) {
        throw DomainError("variable '" + vars_[i] +
                          "' is used but missing from the target list");
      }
      ne[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Polynomial Polynomial::trimmed() const { return with_vars(used_vars()); }

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> unify(const Polynomial& a,
                                        const Polynomial& b) {
  if (a.vars() == b.vars()) return {a, b};
  auto vars = merge_vars(a.vars(), b.vars());
  return {a.with_vars(vars), b.with_vars(vars)};
}

void Polynomial::add_term(const Exponents& e, const BigRational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (vars_ != other.vars_) {
    auto [a, b] = unify(*this, other);
    *this = std::move(a);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this += -other;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) {
    auto [ua, ub] = unify(a, b);
    return ua * ub;
  }
  Polynomial out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  Polynomial::Exponents e(a.vars_.size());
  BigRational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const BigRational& factor) const {
  if (factor == 0) return Polynomial(vars_);
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1, vars_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = var_index(var);
  Polynomial out(vars_);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents ne = e;
    --ne[*idx];
    out.add_term(ne, c * e[*idx]);
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view var) const {
  auto idx = var_index(var);
  if (!idx) return {*this};
  std::vector<Polynomial> out(degree(var) + 1, Polynomial(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[*idx] = 0;
    out[e[*idx]].terms_.emplace(std::move(ne), c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::string_view var,
                                  const Polynomial& value) const {
  if (!var_index(var)) return *this;
  auto coeffs = coefficients_in(var);
  auto vars = merge_vars(vars_, value.vars());
  Polynomial lifted_value = value.with_vars(vars);
  Polynomial result(vars);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * lifted_value + coeffs[k].with_vars(vars);
  }
  if (!value.var_index(var)) {
    std::vector<std::string> kept;
    for (const auto& name : vars) {
      if (name != var) kept.push_back(name);
    }
    result = result.with_vars(std::move(kept));
  }
  return result;
}

std::pair<Polynomial::Exponents, BigRational> Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.rbegin();
}

std::pair<Polynomial::Exponents, BigRational> Polynomial::trailing_term() const {
  if (terms_.empty()) throw DomainError("trailing term of zero polynomial");
  return *terms_.begin();
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (vars_ != divisor.vars_) {
    auto [a, b] = unify(*this, divisor);
    return a.divide_exact(b);
  }
  Polynomial quotient(vars_);
  Polynomial rem = *this;
  const auto [lead_e, lead_c] = divisor.leading_term();
  const std::size_t nv = vars_.size();
  Exponents shift(nv);
  Exponents e(nv);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < nv; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      shift[i] = re[i] - lead_e[i];
    }
    BigRational factor = rc / lead_c;
    quotient.terms_.emplace(shift, factor);
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = de[i] + shift[i];
      rem.add_term(e, -factor * dc);
    }
  }
  return quotient;
}

Polynomial Polynomial::exact_quotient(const Polynomial& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw VerificationError("polynomial division left a remainder");
  return *std::move(q);
}

Polynomial::Exponents Polynomial::min_exponents() const {
  Exponents m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Polynomial Polynomial::shifted_down(const Exponents& exps) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      if (ne[i] < exps[i]) throw DomainError("monomial shift below zero");
      ne[i] -= exps[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

BigRational Polynomial::evaluate(std::span<const BigRational> values) const {
  if (values.size() != vars_.size()) {
    throw DomainError("evaluate: wrong number of values");
  }
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= compclust::pow(values[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << compclust::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << compclust::to_string(mag) << '*' << mono;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> vars)
      : text_(text), result_(std::move(vars)) {}

  Polynomial parse() {
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      BigRational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      parse_term(sign);
      skip();
    }
    return result_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void parse_term(BigRational coef) {
    std::vector<std::pair<std::string, std::uint32_t>> powers;
    while (true) {
      skip();
      if (at_end()) throw ParseError("expected factor", pos_);
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        BigInt num = parse_digits();
        skip();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip();
          std::size_t at = pos_;
          BigInt den = parse_digits();
          if (den == 0) throw ParseError("zero denominator", at);
          coef *= make_rational(num, den);
        } else {
          coef *= BigRational(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                             peek() == '_')) {
          ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        skip();
        std::uint32_t exp = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          exp = static_cast<std::uint32_t>(parse_digits().get_ui());
        }
        powers.emplace_back(std::move(name), exp);
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    auto vars = result_.vars();
    for (const auto& [name, e] : powers) {
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        vars.push_back(name);
      }
    }
    Polynomial::Exponents exps(vars.size(), 0);
    for (const auto& [name, e] : powers) {
      auto idx = static_cast<std::size_t>(
          std::find(vars.begin(), vars.end(), name) - vars.begin());
      exps[idx] += e;
    }
    result_ = result_.with_vars(vars) + Polynomial::monomial(coef, exps, vars);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Polynomial result_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::vector<std::string> vars) {
  return PolyParser(text, std::move(vars)).parse();
}

}  // namespace compclust
