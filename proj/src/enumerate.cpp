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

#include "compclust/enumerate.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "compclust/errors.hpp"

namespace compclust {

namespace {

std::uint64_t composition_count(unsigned n) {
  return n == 0 ? 1 : std::uint64_t{1} << (n - 1);
}

void check_guard(unsigned n, unsigned guard) {
  if (n > guard) {
    throw GuardError("n = " + std::to_string(n) +
                     " exceeds the enumeration guard (oracle guard " +
                     std::to_string(guard) + "); raise it to enumerate");
  }
  if (n > 63) throw GuardError("n above 63 cannot be enumerated");
}

unsigned resolve_workers(unsigned requested, std::uint64_t total) {
  unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (w == 0) w = 1;
  // Small jobs are not worth a thread each.
  const std::uint64_t per_worker = 1U << 14;
  w = static_cast<unsigned>(std::min<std::uint64_t>(w, total / per_worker + 1));
  return w;
}

// Runs `body(begin, end, worker)` over [0, total) split into contiguous
// chunks, one per worker.
template <typename Body>
void parallel_masks(std::uint64_t total, unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(std::uint64_t{0}, total, 0U);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, chunk * w);
    const std::uint64_t end = std::min(total, begin + chunk);
    threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::size_t decode_composition(unsigned n, std::uint64_t mask, int* parts) {
  if (n == 0) return 0;
  std::size_t count = 0;
  int last_cut = 0;
  while (mask != 0) {
    const int bit = __builtin_ctzll(mask);
    const int cut = bit + 1;
    parts[count++] = cut - last_cut;
    last_cut = cut;
    mask &= mask - 1;
  }
  parts[count++] = static_cast<int>(n) - last_cut;
  return count;
}

Composition CompositionRange::iterator::operator*() const {
  std::vector<int> parts(n_ + 1);
  parts.resize(decode_composition(n_, mask_, parts.data()));
  return Composition(std::move(parts));
}

CompositionRange enumerate_compositions(unsigned n, unsigned guard) {
  check_guard(n, guard);
  return CompositionRange(n, composition_count(n));
}

std::uint64_t oracle_avoider_count(unsigned n, const PatternSet& patterns,
                                   const OracleOptions& options) {
  check_guard(n, options.guard);
  const std::uint64_t total = composition_count(n);
  const unsigned workers = resolve_workers(options.workers, total);
  const auto count = kernels::count_kernel(options.isa);
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_masks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<int> parts(n + 1);
    std::uint64_t good = 0;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::size_t k = decode_composition(n, mask, parts.data());
      const std::span<const int> host(parts.data(), k);
      bool clean = true;
      for (const auto& p : patterns.patterns()) {
        if (count(host, p.parts()) != 0) {
          clean = false;
          break;
        }
      }
      good += clean;
    }
    partial[w] = good;
  });
  std::uint64_t sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

JointCounts oracle_joint_counts(unsigned n, const PatternSet& patterns,
                                const OracleOptions& options) {
  check_guard(n, options.guard);
  const std::uint64_t total = composition_count(n);
  const unsigned workers = resolve_workers(options.workers, total);
  const auto count = kernels::count_kernel(options.isa);
  std::vector<JointCounts> partial(workers);
  parallel_masks(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<int> parts(n + 1);
    OccurrenceVector occ(patterns.size());
    JointCounts local;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::size_t k = decode_composition(n, mask, parts.data());
      const std::span<const int> host(parts.data(), k);
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        occ[i] = count(host, patterns[i].parts());
      }
      ++local[occ];
    }
    partial[w] = std::move(local);
  });
  JointCounts merged;
  for (const auto& part : partial) {
    for (const auto& [key, value] : part) merged[key] += value;
  }
  return merged;
}

}  // namespace compclust
