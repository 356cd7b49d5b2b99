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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace compclust {

// GMP keeps mpq_t canonical (reduced, positive denominator) after every
// arithmetic operation, which is exactly the BigRational invariant.
using BigInt = mpz_class;
using BigRational = mpq_class;
using BigFloat = mpf_class;

// Canonicalized num/den. Throws DomainError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q" (optional leading sign, no spaces).
BigRational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& value);

bool is_integer(const BigRational& value);

BigInt floor(const BigRational& value);

// Fixed-point rendering with exactly `digits` fractional digits, rounded to
// nearest with ties away from zero.
std::string to_decimal(const BigRational& value, int digits);

// Same, for a GMP float (converted exactly to a rational first).
std::string to_decimal(const BigFloat& value, int digits);

BigRational pow(const BigRational& base, unsigned long exponent);

}  // namespace compclust
