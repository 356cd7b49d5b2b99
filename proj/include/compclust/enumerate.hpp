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
#include <cstdint>
#include <iterator>
#include <map>
#include <span>

#include "compclust/composition.hpp"
#include "compclust/kernels/containment.hpp"

namespace compclust {

// Exhaustive enumeration above this n is refused unless the caller raises
// the guard (2^25 compositions at the default).
inline constexpr unsigned kDefaultEnumerationGuard = 26;

// Writes the parts of the composition of n encoded by `mask` into `parts`
// (capacity >= n) and returns the part count. Bit i of `mask` set means a cut
// after position i + 1, the usual bijection with subsets of {1, ..., n-1}.
std::size_t decode_composition(unsigned n, std::uint64_t mask, int* parts);

// All compositions of n in binary-counter order of their cut sets: mask 0
// (the one-part composition [n]) first. For n = 0 the single element is [].
class CompositionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(unsigned n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Composition operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    unsigned n_ = 0;
    std::uint64_t mask_ = 0;
  };

  CompositionRange(unsigned n, std::uint64_t count) : n_(n), count_(count) {}

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  unsigned n_;
  std::uint64_t count_;
};

// Throws GuardError when n > guard.
CompositionRange enumerate_compositions(unsigned n,
                                        unsigned guard = kDefaultEnumerationGuard);

struct OracleOptions {
  unsigned guard = kDefaultEnumerationGuard;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  kernels::Isa isa = kernels::best_isa();
};

// Number of compositions of n avoiding every pattern, by brute force.
std::uint64_t oracle_avoider_count(unsigned n, const PatternSet& patterns,
                                   const OracleOptions& options = {});

using JointCounts = std::map<OccurrenceVector, std::uint64_t>;

// Histogram of occurrence vectors over all compositions of n.
JointCounts oracle_joint_counts(unsigned n, const PatternSet& patterns,
                                const OracleOptions& options = {});

}  // namespace compclust
