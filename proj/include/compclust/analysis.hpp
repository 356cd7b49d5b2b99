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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "compclust/bigrational.hpp"
#include "compclust/composition.hpp"
#include "compclust/rational_function.hpp"
#include "compclust/roots.hpp"
#include "compclust/series.hpp"

namespace compclust {

// a(0..N) for the avoiders of `patterns`.
SeriesPrefix series(const PatternSet& patterns, std::size_t N);

enum class GrowthStatus {
  ok,
  // Smallest positive root is 1: polynomial (or bounded) growth, no amplitude.
  subexponential,
  // The root has multiplicity > 1, so C·λ^n is the wrong shape.
  non_simple,
  // a(n)/(C·λ^n) missed 1 at the check index: another singularity competes.
  non_dominant,
};

std::string_view growth_status_name(GrowthStatus status);

struct GrowthOptions {
  int digits = 12;
  std::size_t check_n = 2000;
  double amplitude_tolerance = 1e-6;
  double ratio_tolerance = 1e-8;
};

struct GrowthEstimate {
  // Decimal renderings with `digits` places after the point, correctly
  // rounded from the enclosure.
  std::string lambda;
  std::optional<std::string> amplitude;
  RationalInterval x0_interval;
  int digits = 0;
  GrowthStatus status = GrowthStatus::ok;

  // Working-precision values (several words beyond `digits`).
  BigFloat lambda_value;
  std::optional<BigFloat> amplitude_value;

  // Post-check at n = check_n.
  std::size_t check_n = 0;
  double amplitude_error = 0;  // |a(n)/(C·λ^n) - 1|
  double ratio_error = 0;      // |a(n+1)/a(n) - λ|
};

// Growth of the coefficients of a univariate F = P/Q in lowest terms.
GrowthEstimate growth(const RationalFunction& f, const GrowthOptions& options = {});
GrowthEstimate growth(const PatternSet& patterns, const GrowthOptions& options = {});

struct RankRow {
  Composition pattern;  // lexicographically smaller of P and its reversal
  GrowthEstimate estimate;
  std::optional<std::string> error;  // set when growth() threw
};

struct RankGroup {
  long sum = 0;
  std::vector<RankRow> rows;  // ascending λ; failed rows last
};

struct RankTable {
  int digits = 0;
  std::vector<RankGroup> groups;  // sums 2..max_sum
};

// Every composition of every sum in 2..max_sum, one per reversal class.
// `workers` = 0 uses the hardware thread count; the table does not depend
// on it.
RankTable rank_patterns(int max_sum, int digits, unsigned workers = 0);

}  // namespace compclust
