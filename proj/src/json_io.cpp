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

#include "compclust/json_io.hpp"

#include "compclust/errors.hpp"

namespace compclust::json {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing JSON field '") + key + "'", 0);
  }
  return j.at(key);
}

std::string text(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a JSON string", 0);
  return j.get<std::string>();
}

Json check_report(const MomentCheck& c) {
  Json j;
  j["polynomial"] = npolynomial(c.polynomial);
  j["window"] = Json::array({str(c.window_start), str(c.window_end)});
  j["exact_on_window"] = c.exact_on_window;
  j["max_residual"] = decimal(c.max_residual);
  return j;
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (auto v : e) exps.push_back(std::to_string(v));
    terms.push_back(Json{{"exp", exps}, {"coef", to_string(c)}});
  }
  return terms;
}

Json to_json(const RationalFunction& f) {
  Json j;
  j["vars"] = f.vars();
  j["num"] = to_json(f.num().with_vars(f.vars()));
  j["den"] = to_json(f.den().with_vars(f.vars()));
  return j;
}

Polynomial polynomial_from_json(const Json& terms, const std::vector<std::string>& vars) {
  if (!terms.is_array()) throw ParseError("polynomial terms must be an array", 0);
  Polynomial out(vars);
  for (const auto& t : terms) {
    const Json& exps = field(t, "exp");
    if (!exps.is_array() || exps.size() != vars.size()) {
      throw ParseError("exponent vector does not match variables", 0);
    }
    Polynomial::Exponents e;
    for (const auto& v : exps) {
      const std::string s = text(v);
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad exponent '" + s + "'", 0);
      }
      e.push_back(static_cast<std::uint32_t>(std::stoul(s)));
    }
    out += Polynomial::monomial(parse_rational(text(field(t, "coef"))), std::move(e), vars);
  }
  return out;
}

RationalFunction rational_function_from_json(const Json& j) {
  const Json& vj = field(j, "vars");
  if (!vj.is_array()) throw ParseError("vars must be an array", 0);
  std::vector<std::string> vars;
  for (const auto& v : vj) vars.push_back(text(v));
  RationalFunction f(polynomial_from_json(field(j, "num"), vars),
                     polynomial_from_json(field(j, "den"), vars));
  return RationalFunction(f.num().with_vars(vars), f.den().with_vars(vars));
}

Json decimal(const BigFloat& value, int digits) {
  return Json{{"value", to_decimal(value, digits)}, {"digits", std::to_string(digits)}};
}

Json npolynomial(const NPolynomial& p) {
  Json coefs = Json::array();
  for (const auto& c : p) coefs.push_back(to_string(c));
  return Json{{"text", npoly_to_string(p)}, {"coefficients", coefs}};
}

Json series_report(const PatternSet& patterns, const SeriesPrefix& prefix) {
  Json j;
  j["patterns"] = patterns.to_string();
  j["n"] = str(prefix.size() == 0 ? 0 : prefix.size() - 1);
  Json coefs = Json::array();
  for (const auto& c : prefix.coefficients) coefs.push_back(to_string(c));
  j["coefficients"] = coefs;
  return j;
}

Json engine_report(const PatternSet& patterns, const EngineResult& result) {
  Json j;
  j["patterns"] = patterns.to_string();
  j["states"] = str(result.states_count);
  j["G"] = to_json(result.G);
  j["F"] = to_json(result.F);
  return j;
}

Json growth_report(const PatternSet& patterns, const GrowthEstimate& e) {
  Json j;
  j["patterns"] = patterns.to_string();
  j["status"] = std::string(growth_status_name(e.status));
  j["digits"] = std::to_string(e.digits);
  j["lambda"] = e.lambda;
  j["amplitude"] = e.amplitude ? Json(*e.amplitude) : Json(nullptr);
  j["x0_interval"] = Json{{"lo", to_string(e.x0_interval.lo)}, {"hi", to_string(e.x0_interval.hi)}};
  if (e.check_n != 0) {
    j["check_n"] = str(e.check_n);
    j["amplitude_error"] = decimal(BigFloat(e.amplitude_error), 30);
    j["ratio_error"] = decimal(BigFloat(e.ratio_error), 30);
  }
  return j;
}

Json joint_report(const PatternSet& patterns, const RationalFunction& joint) {
  Json j;
  j["patterns"] = patterns.to_string();
  Json markers = Json::array();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    markers.push_back(Json{{"var", marker_name(i)}, {"pattern", patterns[i].to_string()}});
  }
  j["markers"] = markers;
  j["F"] = to_json(joint);
  return j;
}

Json normality_report(const NormalityTable& t) {
  Json j;
  j["i"] = str(t.i);
  j["j"] = str(t.j);
  j["n"] = str(t.n);
  j["rho"] = decimal(t.rho);
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back(Json{{"p", std::to_string(r.p)},
                        {"q", std::to_string(r.q)},
                        {"empirical", decimal(r.empirical)},
                        {"target", decimal(r.target)},
                        {"gap", decimal(r.gap)}});
  }
  j["rows"] = rows;
  return j;
}

Json moment_report(const MomentReport& r) {
  Json j;
  j["patterns"] = r.patterns.to_string();
  j["order"] = std::to_string(r.order);
  Json per = Json::array();
  for (std::size_t k = 0; k < r.expectation.size(); ++k) {
    per.push_back(Json{{"pattern", r.patterns[k].to_string()},
                       {"expectation", check_report(r.expectation[k])},
                       {"variance", check_report(r.variance[k])}});
  }
  j["marginals"] = per;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(Json{{"i", str(p.i)},
                         {"j", str(p.j)},
                         {"covariance", check_report(p.covariance)},
                         {"correlation", p.correlation ? Json(to_string(*p.correlation))
                                                       : Json(nullptr)},
                         {"correlation_decimal", decimal(p.correlation_value)}});
  }
  j["pairs"] = pairs;
  j["normality"] = r.normality ? normality_report(*r.normality) : Json(nullptr);
  return j;
}

Json rank_report(const RankTable& t) {
  Json j;
  j["digits"] = std::to_string(t.digits);
  Json groups = Json::array();
  for (const auto& g : t.groups) {
    Json rows = Json::array();
    for (const auto& r : g.rows) {
      Json row;
      row["pattern"] = r.pattern.to_compact_string();
      if (r.error) {
        row["error"] = *r.error;
      } else {
        row["lambda"] = r.estimate.lambda;
        row["status"] = std::string(growth_status_name(r.estimate.status));
      }
      rows.push_back(row);
    }
    groups.push_back(Json{{"sum", std::to_string(g.sum)}, {"rows", rows}});
  }
  j["groups"] = groups;
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace compclust::json
