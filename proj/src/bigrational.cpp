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

#include "compclust/bigrational.hpp"

#include <cctype>

#include "compclust/errors.hpp"

namespace compclust {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t k = i; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) {
        throw ParseError("unexpected character in rational", offset + k);
      }
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return BigRational(parse_int(text, 0));
  BigInt den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return make_rational(parse_int(text.substr(0, slash), 0), den);
}

std::string to_string(const BigRational& value) { return value.get_str(10); }

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt floor(const BigRational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::string to_decimal(const BigRational& value, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigRational magnitude = abs(value) * scale;
  BigInt rounded = floor(magnitude + BigRational(1, 2));
  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

std::string to_decimal(const BigFloat& value, int digits) {
  BigRational exact;
  mpq_set_f(exact.get_mpq_t(), value.get_mpf_t());
  return to_decimal(exact, digits);
}

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

}  // namespace compclust
