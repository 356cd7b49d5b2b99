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
#include <vector>

#include "compclust/cluster.hpp"
#include "compclust/polynomial.hpp"
#include "oracles.hpp"

namespace compclust::testing {

inline PatternSet to_pattern_set(const std::vector<Parts>& patterns) {
  std::vector<Composition> cs;
  for (const auto& p : patterns) cs.emplace_back(p);
  return PatternSet(std::move(cs));
}

inline std::vector<Parts> to_parts(const PatternSet& ps) {
  std::vector<Parts> out;
  for (const auto& c : ps.patterns()) out.emplace_back(c.parts().begin(), c.parts().end());
  return out;
}

// Σ B_s expanded through t^max_width by iterating B <- terminal + W·B on
// the system as built (no elimination involved).
inline ClusterTally iterate_system(const ClusterSystem& sys, int max_width) {
  const auto t_index = *Polynomial(sys.vars).var_index(kVarT);
  const auto truncate = [&](const Polynomial& p) {
    Polynomial out(p.vars());
    for (const auto& [e, c] : p.terms()) {
      if (static_cast<int>(e[t_index]) <= max_width) out += Polynomial::monomial(c, e, p.vars());
    }
    return out;
  };
  std::vector<Polynomial> b = sys.terminal;
  for (int round = 0; round < max_width; ++round) {
    std::vector<Polynomial> next = sys.terminal;
    for (std::size_t s = 0; s < sys.size(); ++s) {
      for (std::size_t c = 0; c < sys.size(); ++c) {
        if (!sys.transitions[s][c].is_zero()) next[s] += truncate(sys.transitions[s][c] * b[c]);
      }
    }
    b = std::move(next);
  }
  ClusterTally tally;
  for (std::size_t s = 0; s < sys.size(); ++s) {
    const Polynomial kept = truncate(b[s]);
    for (const auto& [e, c] : kept.terms()) {
      tally[sys.states[s].prefix][{static_cast<long>(e[0]), static_cast<long>(e[t_index])}] +=
          c.get_num().get_si();
    }
  }
  for (auto it = tally.begin(); it != tally.end();) {
    it = it->second.empty() ? tally.erase(it) : std::next(it);
  }
  return tally;
}

}  // namespace compclust::testing
