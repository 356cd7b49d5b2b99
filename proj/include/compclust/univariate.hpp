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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "compclust/bigrational.hpp"
#include "compclust/polynomial.hpp"

// Dense univariate polynomials over Q: index k holds the coefficient of x^k,
// with no trailing zeros (the zero polynomial is the empty vector).
namespace compclust::upoly {

using Dense = std::vector<BigRational>;

void trim(Dense& p);
int degree(const Dense& p);

// Throws DomainError if `p` uses any variable other than `var`.
Dense from_polynomial(const Polynomial& p, std::string_view var);
Polynomial to_polynomial(const Dense& p, const std::string& var);

BigRational evaluate(const Dense& p, const BigRational& at);
int sign_at(const Dense& p, const BigRational& at);

Dense add(const Dense& a, const Dense& b);
Dense sub(const Dense& a, const Dense& b);
Dense mul(const Dense& a, const Dense& b);
Dense scale(const Dense& a, const BigRational& factor);
Dense derivative(const Dense& p);

// a = q*b + r with deg r < deg b.
std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b);

// Integer coefficients with unit content, same sign as the input's leading
// coefficient.
Dense primitive(const Dense& p);

// Greatest common divisor, primitive with positive leading coefficient.
// gcd(0, 0) = 0.
Dense gcd(const Dense& a, const Dense& b);

// p / gcd(p, p'), primitive.
Dense square_free_part(const Dense& p);

}  // namespace compclust::upoly
