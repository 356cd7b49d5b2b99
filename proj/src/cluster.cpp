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

#include "compclust/cluster.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "compclust/errors.hpp"
#include "compclust/univariate.hpp"

namespace compclust {

std::string marker_name(std::size_t index) { return "X" + std::to_string(index + 1); }

std::string shifted_marker_name(std::size_t index) {
  return "U" + std::to_string(index + 1);
}

long State::sum() const {
  long s = 0;
  for (int v : prefix) s += v;
  return s;
}

std::string State::to_string() const {
  const bool wide = std::any_of(prefix.begin(), prefix.end(), [](int v) { return v >= 10; });
  std::string out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(prefix[i]);
  }
  return out;
}

GroupSubset::GroupSubset(std::uint32_t mask) : mask_(mask) {}

GroupSubset GroupSubset::of(std::initializer_list<std::size_t> members) {
  std::uint32_t m = 0;
  for (auto i : members) m |= 1U << i;
  return GroupSubset(m);
}

std::vector<std::size_t> GroupSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::size_t GroupSubset::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<GroupSubset> all_group_subsets(std::size_t r) {
  if (r > 20) throw PatternSetError("too many patterns for the cluster engine");
  std::vector<GroupSubset> out;
  for (std::uint32_t m = 1; m < (1U << r); ++m) out.emplace_back(m);
  return out;
}

Polynomial group_sign(const GroupSubset& group, Mode mode,
                      const std::vector<std::string>& vars) {
  if (mode == Mode::plain) {
    return Polynomial::constant(group.size() % 2 == 0 ? 1 : -1, vars);
  }
  Polynomial::Exponents e(vars.size(), 0);
  for (auto i : group.members()) {
    const std::string name = shifted_marker_name(i);
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw DomainError("marker " + name + " missing from variables");
    e[static_cast<std::size_t>(it - vars.begin())] = 1;
  }
  return Polynomial::monomial(1, std::move(e), vars);
}

Polynomial TransitionWeight::to_polynomial(Mode mode,
                                           const std::vector<std::string>& vars) const {
  Polynomial::Exponents e(vars.size(), 0);
  e[0] = static_cast<std::uint32_t>(x_exp);
  e[1] = t_exp;
  return Polynomial::monomial(1, std::move(e), vars) * group_sign(group, mode, vars);
}

State subset_skyline(const GroupSubset& group, const PatternSet& patterns) {
  if (group.size() == 0) throw DomainError("empty pattern group");
  State s{std::vector<int>(patterns.length(), 0)};
  for (auto i : group.members()) {
    if (i >= patterns.size()) throw DomainError("pattern group index out of range");
    const auto parts = patterns[i].parts();
    for (std::size_t c = 0; c < parts.size(); ++c) {
      s.prefix[c] = std::max(s.prefix[c], parts[c]);
    }
  }
  return s;
}

MergeResult merge_state(const GroupSubset& group, std::size_t offset,
                        const State& child, const PatternSet& patterns) {
  const std::size_t a = patterns.length();
  if (offset < 1 || offset >= a) {
    throw DomainError("merge offset " + std::to_string(offset) +
                      " outside 1.." + std::to_string(a == 0 ? 0 : a - 1));
  }
  if (child.prefix.size() != a) throw DomainError("state length differs from pattern length");
  const State sigma = subset_skyline(group, patterns);
  State parent{sigma.prefix};
  for (std::size_t i = offset; i < a; ++i) {
    parent.prefix[i] = std::max(sigma.prefix[i], child.prefix[i - offset]);
  }
  long overlap = 0;
  for (std::size_t i = 0; i + offset < a; ++i) overlap += child.prefix[i];
  MergeResult r;
  r.weight.x_exp = parent.sum() - overlap;
  r.weight.t_exp = static_cast<unsigned>(offset);
  r.weight.group = group;
  r.parent = std::move(parent);
  return r;
}

std::vector<State> enumerate_states(const PatternSet& patterns) {
  if (patterns.empty()) return {};
  const auto groups = all_group_subsets(patterns.size());
  std::set<State> seen;
  std::deque<State> queue;
  for (const auto& g : groups) {
    State s = subset_skyline(g, patterns);
    if (seen.insert(s).second) queue.push_back(std::move(s));
  }
  while (!queue.empty()) {
    const State child = queue.front();
    queue.pop_front();
    for (const auto& g : groups) {
      for (std::size_t j = 1; j < patterns.length(); ++j) {
        State p = merge_state(g, j, child, patterns).parent;
        if (seen.insert(p).second) queue.push_back(std::move(p));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<std::string> system_vars(const PatternSet& patterns, Mode mode) {
  std::vector<std::string> vars{std::string(kVarX), std::string(kVarT)};
  if (mode == Mode::marker) {
    for (std::size_t i = 0; i < patterns.size(); ++i) vars.push_back(shifted_marker_name(i));
  }
  return vars;
}

// Renders coefficient·B[name] as a signed summand: {negative, text}.
std::pair<bool, std::string> summand(const Polynomial& coef, const std::string& suffix) {
  if (coef.term_count() == 1) {
    std::string s = coef.to_string();
    const bool neg = s.front() == '-';
    if (neg) s.erase(0, 1);
    if (suffix.empty()) return {neg, s};
    if (s == "1") return {neg, suffix};
    return {neg, s + "*" + suffix};
  }
  if (suffix.empty()) return {false, coef.to_string()};
  return {false, "(" + coef.to_string() + ")*" + suffix};
}

// Multiplies each monomial x^e t^j by (1-x)^(a-j) and drops t: the
// equation scaled by (1-x)^a with t = 1/(1-x) substituted.
Polynomial clear_t(const Polynomial& p, std::size_t a,
                   const std::vector<std::string>& out_vars) {
  const auto pieces = p.coefficients_in(kVarT);
  const Polynomial one_minus_x =
      Polynomial::constant(1, out_vars) - Polynomial::variable(kVarX, out_vars);
  Polynomial out(out_vars);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (pieces[j].is_zero()) continue;
    if (j > a) throw DomainError("t-degree above pattern length");
    out += pieces[j].with_vars(out_vars) * one_minus_x.pow(static_cast<unsigned>(a - j));
  }
  return out;
}

// Slices of p by the exponents of every variable but x (index 0), each as a
// dense polynomial in x.
std::map<Polynomial::Exponents, upoly::Dense> x_slices(const Polynomial& p) {
  std::map<Polynomial::Exponents, upoly::Dense> out;
  for (const auto& [e, c] : p.terms()) {
    Polynomial::Exponents rest(e.begin() + 1, e.end());
    auto& d = out[rest];
    if (d.size() <= e[0]) d.resize(e[0] + 1, BigRational(0));
    d[e[0]] += c;
  }
  for (auto& [k, d] : out) upoly::trim(d);
  return out;
}

Polynomial divide_slices(const Polynomial& p, const upoly::Dense& g) {
  Polynomial out(p.vars());
  for (const auto& [rest, d] : x_slices(p)) {
    const auto [q, r] = upoly::divmod(d, g);
    if (!r.empty()) throw VerificationError("content division left a remainder");
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] == 0) continue;
      Polynomial::Exponents e{static_cast<std::uint32_t>(k)};
      e.insert(e.end(), rest.begin(), rest.end());
      out += Polynomial::monomial(q[k], std::move(e), p.vars());
    }
  }
  return out;
}

// Cancels the largest factor common to numerator and denominator that
// depends on x alone. Marker-mode results keep such factors otherwise,
// because general multivariate gcds are not computed.
RationalFunction cancel_x_content(const RationalFunction& f) {
  const auto vars = f.vars();
  if (vars.empty() || vars.front() != kVarX || vars.size() == 1) return f;
  upoly::Dense g;
  for (const Polynomial* p : {&f.num(), &f.den()}) {
    for (const auto& [rest, d] : x_slices(*p)) {
      g = g.empty() ? upoly::primitive(d) : upoly::gcd(g, d);
      if (upoly::degree(g) == 0) return f;
    }
  }
  if (upoly::degree(g) <= 0) return f;
  return RationalFunction(divide_slices(f.num(), g), divide_slices(f.den(), g));
}

}  // namespace

PolyMatrix ClusterSystem::matrix() const {
  PolyMatrix m(size(), std::vector<Polynomial>(size(), Polynomial(vars)));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      m[i][j] = -transitions[i][j];
      if (i == j) m[i][j] += Polynomial::constant(1, vars);
    }
  }
  return m;
}

std::string ClusterSystem::equation(std::size_t row) const {
  if (row >= size()) throw DomainError("equation row out of range");
  std::vector<std::pair<bool, std::string>> parts;
  if (!terminal[row].is_zero()) parts.push_back(summand(terminal[row], ""));
  for (std::size_t c = 0; c < size(); ++c) {
    if (transitions[row][c].is_zero()) continue;
    parts.push_back(summand(transitions[row][c], "B[" + states[c].to_string() + "]"));
  }
  std::string out = "B[" + states[row].to_string() + "] = ";
  if (parts.empty()) return out + "0";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& [neg, text] = parts[k];
    if (k == 0) {
      out += (neg ? "-" : "") + text;
    } else {
      out += (neg ? " - " : " + ") + text;
    }
  }
  return out;
}

ClusterSystem build_system(const PatternSet& patterns, Mode mode) {
  ClusterSystem sys;
  sys.mode = mode;
  sys.pattern_length = patterns.length();
  sys.vars = system_vars(patterns, mode);
  sys.states = enumerate_states(patterns);
  const std::size_t n = sys.states.size();
  const std::size_t a = patterns.length();
  std::map<State, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(sys.states[i], i);

  sys.transitions.assign(n, std::vector<Polynomial>(n, Polynomial(sys.vars)));
  sys.terminal.assign(n, Polynomial(sys.vars));
  const auto groups = all_group_subsets(patterns.size());
  for (const auto& g : groups) {
    const State s = subset_skyline(g, patterns);
    TransitionWeight w{s.sum(), static_cast<unsigned>(a), g};
    sys.terminal[index.at(s)] += w.to_polynomial(mode, sys.vars);
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& g : groups) {
      for (std::size_t j = 1; j < a; ++j) {
        const auto r = merge_state(g, j, sys.states[c], patterns);
        sys.transitions[index.at(r.parent)][c] += r.weight.to_polynomial(mode, sys.vars);
      }
    }
  }
  return sys;
}

SolvedSystem solve_symbolic(const ClusterSystem& system) {
  SolvedSystem out;
  if (system.size() == 0) {
    out.total = RationalFunction(Polynomial(system.vars));
    return out;
  }
  out.solution = solve_fraction_free(system.matrix(), system.terminal);
  out.values = out.solution.values();
  out.total = out.solution.sum();
  return out;
}

RationalFunction cluster_gf(const PatternSet& patterns, Mode mode) {
  std::vector<std::string> vars{std::string(kVarX)};
  if (mode == Mode::marker) {
    for (std::size_t i = 0; i < patterns.size(); ++i) vars.push_back(shifted_marker_name(i));
  }
  if (patterns.empty()) return RationalFunction(Polynomial(vars));
  const ClusterSystem sys = build_system(patterns, mode);
  const std::size_t a = patterns.length();
  const PolyMatrix m = sys.matrix();
  PolyMatrix scaled(sys.size(), std::vector<Polynomial>(sys.size(), Polynomial(vars)));
  std::vector<Polynomial> rhs(sys.size(), Polynomial(vars));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = 0; j < sys.size(); ++j) scaled[i][j] = clear_t(m[i][j], a, vars);
    rhs[i] = clear_t(sys.terminal[i], a, vars);
  }
  RationalFunction g = solve_fraction_free(scaled, rhs).sum();
  return RationalFunction(g.num().with_vars(vars), g.den().with_vars(vars));
}

RationalFunction assemble_avoider_gf(const RationalFunction& cluster) {
  const auto vars = merge_vars({std::string(kVarX)}, cluster.vars());
  const Polynomial n = cluster.num().with_vars(vars);
  const Polynomial q = cluster.den().with_vars(vars);
  const Polynomial one = Polynomial::constant(1, vars);
  const Polynomial x = Polynomial::variable(kVarX, vars);
  const Polynomial one_minus_x = one - x;
  const Polynomial one_minus_2x = one - x.scaled(2);
  return RationalFunction(one_minus_x * q, one_minus_2x * q - one_minus_x * n);
}

RationalFunction all_compositions_gf() {
  return assemble_avoider_gf(RationalFunction(Polynomial({std::string(kVarX)})));
}

EngineResult avoider_gf(const PatternSet& patterns) {
  EngineResult r;
  r.mode = Mode::plain;
  r.G = cluster_gf(patterns, Mode::plain);
  r.F = assemble_avoider_gf(r.G);
  r.states_count = enumerate_states(patterns).size();
  return r;
}

RationalFunction joint_gf_shifted(const PatternSet& patterns) {
  return cancel_x_content(assemble_avoider_gf(cluster_gf(patterns, Mode::marker)));
}

RationalFunction joint_gf(const PatternSet& patterns) {
  std::vector<std::string> vars{std::string(kVarX)};
  for (std::size_t i = 0; i < patterns.size(); ++i) vars.push_back(marker_name(i));
  RationalFunction f = joint_gf_shifted(patterns);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Polynomial shifted =
        Polynomial::variable(marker_name(i), vars) - Polynomial::constant(1, vars);
    f = f.substitute(shifted_marker_name(i), RationalFunction(shifted));
  }
  f = cancel_x_content(f);
  return RationalFunction(f.num().with_vars(vars), f.den().with_vars(vars));
}

}  // namespace compclust
