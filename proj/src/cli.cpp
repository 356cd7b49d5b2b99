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

#include "compclust/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "compclust/analysis.hpp"
#include "compclust/cluster.hpp"
#include "compclust/enumerate.hpp"
#include "compclust/errors.hpp"
#include "compclust/json_io.hpp"
#include "compclust/moments.hpp"

namespace compclust::cli {

namespace {

struct Config {
  std::string patterns;
  bool json = false;
  int digits = 12;
  std::size_t n = 30;
  int order = 6;
  int max_sum = 6;
  unsigned workers = 0;
  unsigned oracle_guard = kDefaultEnumerationGuard;
  std::size_t window_start = 0;
  std::size_t window_length = 16;
};

// Pulls a monomial factor and a sign out of the numerator:
// "-x^7*t^3*(1 + x^3*t)/(1 + x^3*t + x^5*t^2)".
std::string factored(const RationalFunction& f) {
  if (f.is_zero()) return "0";
  const Polynomial& num = f.num();
  const auto low = num.min_exponents();
  Polynomial rest = num.shifted_down(low);
  std::string sign;
  if (rest.trailing_term().second < 0) {
    rest = -rest;
    sign = "-";
  }
  Polynomial mono = Polynomial::monomial(1, low, num.vars());
  std::string top;
  const bool has_mono = !mono.is_constant();
  if (rest.term_count() == 1) {
    Polynomial whole = mono * rest;
    top = whole.to_string();
  } else if (has_mono) {
    top = mono.to_string() + "*(" + rest.to_string() + ")";
  } else {
    top = "(" + rest.to_string() + ")";
  }
  std::string out = sign + top;
  if (f.den().is_constant() && f.den().constant_term() == 1) return out;
  const std::string den = f.den().to_string();
  return out + "/" + (f.den().term_count() == 1 ? den : "(" + den + ")");
}

PatternSet require_patterns(const Config& c) {
  if (c.patterns.empty()) throw CLI::ValidationError("--patterns", "this command needs --patterns");
  return PatternSet::parse(c.patterns);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

void cmd_gf(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  const EngineResult r = avoider_gf(ps);
  if (c.json) {
    out << json::render(json::engine_report(ps, r));
    return;
  }
  out << "F = " << r.F.to_string() << "\n";
}

void cmd_series(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  const SeriesPrefix s = series(ps, c.n);
  if (c.json) {
    out << json::render(json::series_report(ps, s));
    return;
  }
  std::vector<std::string> parts;
  for (const auto& v : s.coefficients) parts.push_back(to_string(v));
  out << join(parts, ", ") << "\n";
}

void cmd_asym(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  GrowthOptions options;
  options.digits = c.digits;
  const GrowthEstimate e = growth(ps, options);
  if (c.json) {
    out << json::render(json::growth_report(ps, e));
    return;
  }
  out << "lambda = " << e.lambda << "\n";
  if (e.amplitude) out << "C = " << *e.amplitude << "\n";
  out << "status = " << growth_status_name(e.status) << "\n";
}

void cmd_joint(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  out << json::render(json::joint_report(ps, joint_gf(ps)));
}

void print_check(std::ostream& out, const std::string& label, const MomentCheck& m) {
  out << "  " << label << " = " << npoly_to_string(m.polynomial) << "\n"
      << "    window " << m.window_start << ".." << m.window_end << ": "
      << (m.exact_on_window ? "exact"
                            : "not exact, max residual " + to_decimal(m.max_residual, 20))
      << "\n";
}

void cmd_moments(const Config& c, bool n_given, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  MomentOptions options;
  options.order = c.order;
  options.window = MomentWindow{c.window_start, c.window_length};
  options.normality_n = n_given ? c.n : 200;
  const MomentReport r = moments(ps, options);
  if (c.json) {
    out << json::render(json::moment_report(r));
    return;
  }
  for (std::size_t k = 0; k < r.expectation.size(); ++k) {
    out << "pattern " << k + 1 << " (" << ps[k].to_string() << ")\n";
    print_check(out, "E[N]", r.expectation[k]);
    print_check(out, "Var[N]", r.variance[k]);
  }
  for (const auto& p : r.pairs) {
    out << "pair (" << p.i + 1 << "," << p.j + 1 << ")\n";
    print_check(out, "Cov", p.covariance);
    out << "  correlation = "
        << (p.correlation ? to_string(*p.correlation) + " = " : std::string())
        << to_decimal(p.correlation_value, 20) << "\n";
  }
  if (r.normality) {
    const auto& t = *r.normality;
    out << "standardized moments at n = " << t.n << " (rho = " << to_decimal(t.rho, 12)
        << ")\n";
    for (const auto& row : t.rows) {
      out << "  (" << row.p << "," << row.q << ")  empirical " << to_decimal(row.empirical, 12)
          << "  target " << to_decimal(row.target, 12) << "  gap "
          << to_decimal(row.gap, 12) << "\n";
    }
  }
}

void cmd_rank(const Config& c, bool digits_given, std::ostream& out) {
  const RankTable t = rank_patterns(c.max_sum, digits_given ? c.digits : 10, c.workers);
  if (c.json) {
    out << json::render(json::rank_report(t));
    return;
  }
  for (const auto& g : t.groups) {
    std::vector<std::string> parts;
    for (const auto& r : g.rows) {
      parts.push_back(r.pattern.to_compact_string() + " (" +
                      (r.error ? "error: " + *r.error : r.estimate.lambda) + ")");
    }
    out << g.sum << ": " << join(parts, ", ") << "\n";
  }
}

void cmd_oracle(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  OracleOptions options;
  options.guard = c.oracle_guard;
  options.workers = c.workers;
  const std::uint64_t count = oracle_avoider_count(static_cast<unsigned>(c.n), ps, options);
  if (c.json) {
    json::Json j;
    j["patterns"] = ps.to_string();
    j["n"] = std::to_string(c.n);
    j["count"] = std::to_string(count);
    out << json::render(j);
    return;
  }
  out << count << "\n";
}

void cmd_explain(const Config& c, std::ostream& out) {
  const PatternSet ps = require_patterns(c);
  if (!c.json) {
    out << explain(ps);
    return;
  }
  const ClusterSystem sys = build_system(ps, Mode::plain);
  const SolvedSystem solved = solve_symbolic(sys);
  json::Json j;
  j["patterns"] = ps.to_string();
  json::Json states = json::Json::array();
  json::Json eqs = json::Json::array();
  json::Json values = json::Json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    states.push_back(sys.states[i].to_string());
    eqs.push_back(sys.equation(i));
    values.push_back(json::Json{{"state", sys.states[i].to_string()},
                                {"B", json::to_json(solved.values[i])}});
  }
  j["states"] = states;
  j["equations"] = eqs;
  j["solution"] = values;
  j["G_xt"] = json::to_json(solved.total);
  const EngineResult r = avoider_gf(ps);
  j["G"] = json::to_json(r.G);
  j["F"] = json::to_json(r.F);
  out << json::render(j);
}

}  // namespace

std::string explain(const PatternSet& patterns) {
  std::ostringstream out;
  if (patterns.empty()) throw DomainError("explain needs at least one pattern");
  const ClusterSystem sys = build_system(patterns, Mode::plain);
  out << "patterns: " << patterns.to_string() << " (length " << patterns.length() << ")\n";
  std::vector<std::string> names;
  for (const auto& s : sys.states) names.push_back(s.to_string());
  out << "states (" << sys.size() << "): " << join(names, ", ") << "\n\n";
  out << "equations:\n";
  for (std::size_t i = 0; i < sys.size(); ++i) out << "  " << sys.equation(i) << "\n";

  const SolvedSystem solved = solve_symbolic(sys);
  out << "\nsolution:\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out << "  B[" << names[i] << "] = " << factored(solved.values[i]) << "\n";
  }
  out << "\nG(x,t) = " << factored(solved.total) << "\n";
  const Polynomial one = Polynomial::constant(1, {std::string(kVarX)});
  const RationalFunction t_value(one, one - Polynomial::variable(kVarX, {std::string(kVarX)}));
  const RationalFunction g = solved.total.substitute(kVarT, t_value);
  out << "G(x) = G(x, 1/(1-x)) = " << factored(g) << "\n";
  out << "F(x) = 1/(1 - x/(1-x) - G(x)) = " << assemble_avoider_gf(g).to_string() << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Compositions avoiding patterns by containment: cluster-method generating "
               "functions, series, growth constants and occurrence statistics.",
               "compclust"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--patterns", c.patterns,
                 "Pattern set: parts separated by ',', patterns by ';' (e.g. \"2,3,4;4,3,2\")");
  app.add_flag("--json", c.json, "Print JSON instead of text");
  auto* digits = app.add_option("--digits", c.digits, "Decimal places")->check(CLI::Range(1, 2000));
  auto* n_opt = app.add_option("--n", c.n, "Largest n (series, oracle) or moment size");
  app.add_option("--order", c.order, "Moment order")->check(CLI::Range(2, 12));
  app.add_option("--max-sum", c.max_sum, "Largest pattern sum for rank")->check(CLI::Range(2, 24));
  app.add_option("--workers", c.workers, "Worker threads (0 = all cores)");
  app.add_option("--oracle-guard", c.oracle_guard, "Largest n the oracle will enumerate");
  app.add_option("--window-start", c.window_start, "Moment verification window start (0 = 4a)");
  app.add_option("--window-length", c.window_length, "Moment verification window length")
      ->check(CLI::Range(8, 100000));

  app.add_subcommand("gf", "Generating function F(x) of the avoiders");
  app.add_subcommand("series", "Coefficients a(0..n)");
  app.add_subcommand("asym", "Growth constant and amplitude");
  app.add_subcommand("joint", "Joint generating function with occurrence markers (JSON)");
  app.add_subcommand("moments", "Expectation, variance, covariance, normality table");
  app.add_subcommand("rank", "Growth constants of all single patterns up to --max-sum");
  app.add_subcommand("oracle", "Brute-force avoider count at size n");
  app.add_subcommand("explain", "Cluster-method walkthrough");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "gf") {
      cmd_gf(c, out);
    } else if (cmd == "series") {
      cmd_series(c, out);
    } else if (cmd == "asym") {
      cmd_asym(c, out);
    } else if (cmd == "joint") {
      cmd_joint(c, out);
    } else if (cmd == "moments") {
      cmd_moments(c, n_opt->count() > 0, out);
    } else if (cmd == "rank") {
      cmd_rank(c, digits->count() > 0, out);
    } else if (cmd == "oracle") {
      cmd_oracle(c, out);
    } else {
      cmd_explain(c, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PatternSetError& e) {
    err << "error: " << e.what() << "\n";
    return kPatternSet;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kEngine;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace compclust::cli
