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

#include <vector>

#include "compclust/polynomial.hpp"
#include "compclust/rational_function.hpp"

namespace compclust {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Solution of M·B = rhs in common-denominator form: B_i = numerators[i] /
// denominator, where denominator is ±det(M).
struct FractionFreeSolution {
  std::vector<Polynomial> numerators;
  Polynomial denominator;

  std::vector<RationalFunction> values() const;
  // Σ B_i as a single fraction over the common denominator.
  RationalFunction sum() const;
};

// Bareiss elimination over the polynomial ring. At each step the pivot is the
// nonzero candidate with the fewest terms. Every division is exact; the
// result is checked by substituting back into the original system before it
// is returned. Throws SingularSystemError naming the column whose pivot
// vanished, VerificationError if the back-substitution check fails.
FractionFreeSolution solve_fraction_free(const PolyMatrix& m,
                                         const std::vector<Polynomial>& rhs);

std::vector<RationalFunction> solve_linear_system(
    const PolyMatrix& m, const std::vector<Polynomial>& rhs);

}  // namespace compclust
