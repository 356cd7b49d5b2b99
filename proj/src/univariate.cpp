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

#include "compclust/univariate.hpp"

#include <algorithm>

#include "compclust/errors.hpp"

namespace compclust::upoly {

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense from_polynomial(const Polynomial& p, std::string_view var) {
  auto idx = p.var_index(var);
  Dense out(idx ? p.degree(var) + 1 : (p.is_zero() ? 0 : 1));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0 && (!idx || i != *idx)) {
        throw DomainError("polynomial is not univariate in '" +
                          std::string(var) + "'");
      }
    }
    out[idx ? e[*idx] : 0] = c;
  }
  trim(out);
  return out;
}

Polynomial to_polynomial(const Dense& p, const std::string& var) {
  Polynomial::TermMap terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) terms.emplace(Polynomial::Exponents{static_cast<std::uint32_t>(k)}, p[k]);
  }
  return Polynomial({var}, std::move(terms));
}

BigRational evaluate(const Dense& p, const BigRational& at) {
  BigRational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * at + p[k];
  }
  return acc;
}

int sign_at(const Dense& p, const BigRational& at) {
  return sgn(evaluate(p, at));
}

Dense add(const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Dense sub(const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Dense scale(const Dense& a, const BigRational& factor) {
  Dense out = a;
  for (auto& c : out) c *= factor;
  trim(out);
  return out;
}

Dense derivative(const Dense& p) {
  if (p.size() <= 1) return {};
  Dense out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<unsigned long>(k);
  trim(out);
  return out;
}

std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b) {
  if (b.empty()) throw DomainError("univariate division by zero");
  Dense rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  Dense quot(rem.size() - b.size() + 1);
  const BigRational& lead = b.back();
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    if (rem[k] == 0) continue;
    BigRational f = rem[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
    if (k == 0) break;
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Dense primitive(const Dense& p) {
  if (p.empty()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : p) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  BigInt content = 0;
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  for (const auto& c : p) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  Dense out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = BigRational(ints[i] / content);
  return out;
}

Dense gcd(const Dense& a_in, const Dense& b_in) {
  Dense a = primitive(a_in);
  Dense b = primitive(b_in);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = primitive(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) a = scale(a, -1);
  return a;
}

Dense square_free_part(const Dense& p) {
  if (p.size() <= 1) return primitive(p);
  Dense g = gcd(p, derivative(p));
  return primitive(divmod(p, g).first);
}

}  // namespace compclust::upoly
