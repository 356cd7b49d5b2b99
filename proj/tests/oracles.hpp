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

// Independent reference implementations for tests. Nothing here calls into
// the library's engine: compositions are generated recursively, containment
// is a direct double loop, clusters are built by explicit stacking and
// Gaussian moments by enumerating pairings.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace compclust::testing {

using Parts = std::vector<int>;

inline bool naive_occurs_at(const Parts& host, const Parts& pattern, std::size_t start) {
  if (start + pattern.size() > host.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (pattern[k] > host[start + k]) return false;
  }
  return true;
}

inline std::size_t naive_count(const Parts& host, const Parts& pattern) {
  if (pattern.empty() || pattern.size() > host.size()) return 0;
  std::size_t c = 0;
  for (std::size_t s = 0; s + pattern.size() <= host.size(); ++s) c += naive_occurs_at(host, pattern, s);
  return c;
}

// Calls `visit` on every composition of n, built part by part.
inline void for_each_composition(int n, const std::function<void(const Parts&)>& visit) {
  Parts cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      visit(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
}

inline std::uint64_t naive_avoiders(int n, const std::vector<Parts>& patterns) {
  std::uint64_t c = 0;
  for_each_composition(n, [&](const Parts& h) {
    for (const auto& p : patterns) {
      if (naive_count(h, p) != 0) return;
    }
    ++c;
  });
  return c;
}

inline std::map<std::vector<std::size_t>, std::uint64_t> naive_joint(
    int n, const std::vector<Parts>& patterns) {
  std::map<std::vector<std::size_t>, std::uint64_t> out;
  for_each_composition(n, [&](const Parts& h) {
    std::vector<std::size_t> occ;
    for (const auto& p : patterns) occ.push_back(naive_count(h, p));
    ++out[occ];
  });
  return out;
}

// Plain-mode cluster weights grouped by state: state -> {(x exp, t exp) -> Σ sign}.
using ClusterTally = std::map<Parts, std::map<std::pair<long, long>, long>>;

// Every cluster of width <= max_width, by stacking nonempty pattern groups at
// start columns 0 = c1 < c2 < ... with gaps in 1..a-1.
inline ClusterTally explicit_clusters(const std::vector<Parts>& patterns, int max_width) {
  ClusterTally tally;
  if (patterns.empty()) return tally;
  const int a = static_cast<int>(patterns.front().size());
  const int r = static_cast<int>(patterns.size());
  std::vector<std::pair<int, int>> placed;  // (start, group mask)
  std::function<void(int)> rec = [&](int last_start) {
    const int width = last_start + a;
    Parts sky(static_cast<std::size_t>(width), 0);
    long violations = 0;
    for (const auto& [start, mask] : placed) {
      for (int i = 0; i < r; ++i) {
        if (!((mask >> i) & 1)) continue;
        ++violations;
        for (int k = 0; k < a; ++k) {
          auto& v = sky[static_cast<std::size_t>(start + k)];
          v = std::max(v, patterns[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
      }
    }
    long sum = 0;
    for (int v : sky) sum += v;
    const Parts state(sky.begin(), sky.begin() + a);
    tally[state][{sum, width}] += (violations % 2 == 0) ? 1 : -1;
    for (int gap = 1; gap < a; ++gap) {
      const int next = last_start + gap;
      if (next + a > max_width) break;
      for (int mask = 1; mask < (1 << r); ++mask) {
        placed.emplace_back(next, mask);
        rec(next);
        placed.pop_back();
      }
    }
  };
  for (int mask = 1; mask < (1 << r); ++mask) {
    placed.assign(1, {0, mask});
    rec(0);
  }
  // Drop cancelled entries so tallies compare structurally.
  for (auto& [s, m] : tally) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  }
  for (auto it = tally.begin(); it != tally.end();) {
    it = it->second.empty() ? tally.erase(it) : std::next(it);
  }
  return tally;
}

// E[U^p V^q] for standard normals with correlation rho, by summing over
// all perfect matchings of p U's and q V's. Index k of the result is the
// coefficient of rho^k.
inline std::vector<long> wick_by_pairings(int p, int q) {
  std::vector<int> items;  // 0 = U, 1 = V
  items.insert(items.end(), static_cast<std::size_t>(p), 0);
  items.insert(items.end(), static_cast<std::size_t>(q), 1);
  std::vector<long> out(static_cast<std::size_t>(p + q + 1), 0);
  std::vector<bool> used(items.size(), false);
  std::function<void(int)> rec = [&](int cross) {
    std::size_t first = 0;
    while (first < items.size() && used[first]) ++first;
    if (first == items.size()) {
      ++out[static_cast<std::size_t>(cross)];
      return;
    }
    used[first] = true;
    for (std::size_t k = first + 1; k < items.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      rec(cross + (items[first] != items[k] ? 1 : 0));
      used[k] = false;
    }
    used[first] = false;
  };
  if ((p + q) % 2 == 0) rec(0);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (out.size() == 1 && out[0] == 0) out.clear();
  return out;
}

// Random pattern set: r distinct patterns of length a with parts in 1..max_part.
inline std::vector<Parts> random_pattern_set(std::mt19937_64& rng, int a, int r, int max_part) {
  std::uniform_int_distribution<int> part(1, max_part);
  std::vector<Parts> out;
  while (static_cast<int>(out.size()) < r) {
    Parts p;
    for (int k = 0; k < a; ++k) p.push_back(part(rng));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace compclust::testing
