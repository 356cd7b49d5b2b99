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

#include <json.hpp>

#include "compclust/analysis.hpp"
#include "compclust/cluster.hpp"
#include "compclust/moments.hpp"
#include "compclust/rational_function.hpp"
#include "compclust/series.hpp"

// JSON renderings. Every number is a string: rationals as "p" or "p/q",
// decimals as {"value": "...", "digits": "d"}. Keys keep insertion order so
// output is byte-stable.
namespace compclust::json {

using Json = nlohmann::ordered_json;

// Decimal places used for high-precision values in reports.
inline constexpr int kReportDigits = 20;

// {"vars": [...], "num": [{"exp": ["e1", ...], "coef": "p/q"}, ...], "den": [...]}
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& terms, const std::vector<std::string>& vars);

Json decimal(const BigFloat& value, int digits = kReportDigits);
Json npolynomial(const NPolynomial& p);

Json series_report(const PatternSet& patterns, const SeriesPrefix& prefix);
Json engine_report(const PatternSet& patterns, const EngineResult& result);
Json growth_report(const PatternSet& patterns, const GrowthEstimate& estimate);
Json joint_report(const PatternSet& patterns, const RationalFunction& joint);
Json moment_report(const MomentReport& report);
Json normality_report(const NormalityTable& table);
Json rank_report(const RankTable& table);

// Two-space indented dump with a trailing newline.
std::string render(const Json& j);

}  // namespace compclust::json
