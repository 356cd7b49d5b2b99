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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compclust/composition.hpp"
#include "compclust/linear_solve.hpp"
#include "compclust/polynomial.hpp"
#include "compclust/rational_function.hpp"

// Cluster method for avoiding compositions by containment.
//
// A cluster is a chain of violations: start columns p1 < p2 < ... with a
// nonempty group of patterns starting at each, consecutive starts 1..a-1
// apart so every column is covered. Its skyline is the columnwise maximum of
// the stacked patterns, and its weight is
//
//     x^Sum(skyline) · t^width · Π_groups sign(group)
//
// where sign(T) = (-1)^|T| when counting avoiders and Π_{i∈T} U_i when
// tracking occurrences (U_i stands for X_i - 1). Clusters are classified by
// their state, the first a skyline entries; B_s collects the weight of all
// clusters in state s. Peeling off the first group gives the linear system
//
//     B_s = terminal(s) + Σ weight(T, j, child) · B_child,
//
// and the cluster generating function is G = Σ_s B_s at t = 1/(1-x), which
// accounts for every composition that can sit on top of a cluster. Finally
// F = 1 / (1 - x/(1-x) - G).
namespace compclust {

enum class Mode { plain, marker };

inline constexpr std::string_view kVarX = "x";
inline constexpr std::string_view kVarT = "t";

// "X1", "X2", ... : occurrence markers in joint generating functions.
std::string marker_name(std::size_t index);
// "U1", "U2", ... : shifted markers U_i = X_i - 1 used inside the engine.
std::string shifted_marker_name(std::size_t index);

// A length-a skyline prefix. Only subset_skyline and merge_state make these.
struct State {
  std::vector<int> prefix;

  long sum() const;
  std::string to_string() const;  // "233" (comma-separated if a part >= 10)
  friend auto operator<=>(const State&, const State&) = default;
};

// Nonempty set of pattern indices (0-based) whose violations share a start
// column.
class GroupSubset {
 public:
  GroupSubset() = default;
  explicit GroupSubset(std::uint32_t mask);
  static GroupSubset of(std::initializer_list<std::size_t> members);

  std::uint32_t mask() const noexcept { return mask_; }
  std::vector<std::size_t> members() const;
  std::size_t size() const noexcept;
  bool contains(std::size_t index) const noexcept { return (mask_ >> index) & 1U; }

  friend auto operator<=>(const GroupSubset&, const GroupSubset&) = default;

 private:
  std::uint32_t mask_ = 0;
};

// All nonempty subsets of {0, ..., r-1} in increasing mask order.
std::vector<GroupSubset> all_group_subsets(std::size_t r);

// Monomial x^x_exp · t^t_exp · sign(group).
struct TransitionWeight {
  long x_exp = 0;
  unsigned t_exp = 0;
  GroupSubset group;

  Polynomial to_polynomial(Mode mode, const std::vector<std::string>& vars) const;
};

struct MergeResult {
  State parent;
  TransitionWeight weight;
};

// Columnwise maximum of the patterns in `group`.
State subset_skyline(const GroupSubset& group, const PatternSet& patterns);

// Parent state obtained by stacking `group` on top of a cluster in state
// `child` that starts `offset` columns later (1 <= offset <= a-1; otherwise
// DomainError). The weight carries the skyline and width increments.
MergeResult merge_state(const GroupSubset& group, std::size_t offset,
                        const State& child, const PatternSet& patterns);

// Least fixed point of merge_state starting from every subset skyline,
// sorted lexicographically.
std::vector<State> enumerate_states(const PatternSet& patterns);

// Sign polynomial of one group: ±1 in plain mode, Π U_i in marker mode.
Polynomial group_sign(const GroupSubset& group, Mode mode,
                      const std::vector<std::string>& vars);

struct ClusterSystem {
  Mode mode = Mode::plain;
  std::size_t pattern_length = 0;
  std::vector<State> states;
  // x, t, then U1..Ur in marker mode.
  std::vector<std::string> vars;
  // transitions[s][c]: total weight multiplying B_c in the equation of B_s.
  PolyMatrix transitions;
  std::vector<Polynomial> terminal;

  std::size_t size() const noexcept { return states.size(); }
  // I - W, so that matrix() · B = terminal.
  PolyMatrix matrix() const;
  // "B[232] = -x^7*t^3 - x^5*t^2*B[232] - x^5*t^2*B[233]"
  std::string equation(std::size_t row) const;
};

ClusterSystem build_system(const PatternSet& patterns, Mode mode);

// The system solved with t kept symbolic: B_s(x, t[, U]).
struct SolvedSystem {
  FractionFreeSolution solution;
  std::vector<RationalFunction> values;  // B_s, in state order
  RationalFunction total;                // Σ B_s
};

SolvedSystem solve_symbolic(const ClusterSystem& system);

// Cluster generating function G(x) (plain) or G(x; U) (marker) with
// t := 1/(1-x) already applied. Rows are scaled by (1-x)^a before solving,
// which is the same substitution done ahead of elimination.
RationalFunction cluster_gf(const PatternSet& patterns, Mode mode);

// 1/(1 - x/(1-x) - G).
RationalFunction assemble_avoider_gf(const RationalFunction& cluster);

// (1-x)/(1-2x).
RationalFunction all_compositions_gf();

struct EngineResult {
  RationalFunction G;
  RationalFunction F;
  std::size_t states_count = 0;
  Mode mode = Mode::plain;
};

EngineResult avoider_gf(const PatternSet& patterns);

// F_S(x; U1..Ur) with U_i = X_i - 1: the form the moment machinery wants.
RationalFunction joint_gf_shifted(const PatternSet& patterns);

// F_S(x; X1..Xr): coefficient of x^n X1^c1 ... Xr^cr counts compositions
// of n with exactly c_i occurrences of pattern i.
RationalFunction joint_gf(const PatternSet& patterns);

}  // namespace compclust
