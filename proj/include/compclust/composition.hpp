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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compclust {

// Ordered list of positive parts. The empty list is the composition of 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  long sum() const noexcept { return sum_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  Composition reversed() const;

  // "2,3,2"; empty composition renders as "".
  std::string to_string() const;
  // "232" when every part is a single digit, otherwise to_string().
  std::string to_compact_string() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  long sum_ = 0;
};

// The forbidden set: distinct nonempty compositions of one common length.
// An empty set is allowed and forbids nothing.
class PatternSet {
 public:
  PatternSet() = default;
  // Throws PatternSetError on an empty pattern, duplicates or mixed lengths.
  explicit PatternSet(std::vector<Composition> patterns);

  // Pattern text: parts separated by ',', patterns by ';', whitespace
  // ignored. Throws ParseError (with the offending offset) or
  // PatternSetError.
  static PatternSet parse(std::string_view text);

  std::span<const Composition> patterns() const noexcept { return patterns_; }
  const Composition& operator[](std::size_t i) const { return patterns_[i]; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  // Common length a (0 for the empty set).
  std::size_t length() const noexcept { return length_; }
  long min_sum() const;
  int max_part() const;

  // Every pattern reversed, same order.
  PatternSet reversed() const;

  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Composition> patterns_;
  std::size_t length_ = 0;
};

// counts[i] is the number of offsets at which pattern i occurs.
using OccurrenceVector = std::vector<std::size_t>;

// True iff pattern_j <= host_{i+j-1} for every j; `position` is 1-based and
// must lie in [1, len(host) - len(pattern) + 1] (DomainError otherwise).
bool includes_at(const Composition& host, const Composition& pattern,
                 std::size_t position);

bool includes(const Composition& host, const Composition& pattern);

OccurrenceVector occurrences(const Composition& host, const PatternSet& patterns);

bool avoids(const Composition& host, const PatternSet& patterns);

}  // namespace compclust
