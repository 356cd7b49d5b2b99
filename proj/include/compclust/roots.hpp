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

#include <string_view>

#include "compclust/bigrational.hpp"
#include "compclust/polynomial.hpp"
#include "compclust/univariate.hpp"

namespace compclust {

struct RationalInterval {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
};

// Number of distinct real roots of `p` in the half-open interval (lo, hi],
// by a Sturm sequence of the square-free part.
int count_real_roots(const upoly::Dense& p, const BigRational& lo,
                     const BigRational& hi);

// Encloses the smallest root of `p` in (0, 1] within an interval of width at
// most 2^-precision_bits. Roots are isolated with a Sturm sequence of the
// square-free part, then refined by bisection on exact signs. A root that is
// hit exactly (for example x = 1) comes back as a point interval.
// Throws DomainError if p(0) == 0 or p has no root in (0, 1].
RationalInterval smallest_positive_real_root(const Polynomial& p,
                                             unsigned precision_bits,
                                             std::string_view var = "x");

}  // namespace compclust
