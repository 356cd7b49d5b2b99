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

#include "compclust/composition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "compclust/errors.hpp"
#include "compclust/kernels/containment.hpp"

namespace compclust {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw PatternSetError("composition parts must be positive, got " +
                            std::to_string(p));
    }
    sum_ += p;
  }
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Composition::to_compact_string() const {
  if (std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; })) {
    std::string out;
    for (int p : parts_) out += static_cast<char>('0' + p);
    return out;
  }
  return to_string();
}

PatternSet::PatternSet(std::vector<Composition> patterns)
    : patterns_(std::move(patterns)) {
  std::set<Composition> seen;
  for (const auto& p : patterns_) {
    if (p.empty()) throw PatternSetError("patterns must be nonempty");
    if (length_ == 0) length_ = p.length();
    if (p.length() != length_) {
      throw PatternSetError("patterns must share one length (got " +
                            std::to_string(length_) + " and " +
                            std::to_string(p.length()) + ")");
    }
    if (!seen.insert(p).second) {
      throw PatternSetError("duplicate pattern " + p.to_string());
    }
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Composition> patterns;
  std::vector<int> current;
  bool expect_number = true;
  bool any_token = false;
  std::size_t i = 0;
  auto finish_pattern = [&](std::size_t at) {
    if (expect_number) throw ParseError("expected a part", at);
    patterns.emplace_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    any_token = true;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!expect_number) throw ParseError("expected ',' or ';'", i);
      const std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > std::numeric_limits<int>::max()) {
          throw ParseError("part too large", start);
        }
        ++i;
      }
      if (value == 0) throw ParseError("parts must be positive", start);
      current.push_back(static_cast<int>(value));
      expect_number = false;
      continue;
    }
    if (ch == ',') {
      if (expect_number) throw ParseError("expected a part", i);
      expect_number = true;
    } else if (ch == ';') {
      finish_pattern(i);
      expect_number = true;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    ++i;
  }
  if (!any_token) throw ParseError("empty pattern text", 0);
  finish_pattern(text.size());
  return PatternSet(std::move(patterns));
}

long PatternSet::min_sum() const {
  long m = 0;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    m = i == 0 ? patterns_[i].sum() : std::min(m, patterns_[i].sum());
  }
  return m;
}

int PatternSet::max_part() const {
  int m = 0;
  for (const auto& p : patterns_) {
    for (int v : p.parts()) m = std::max(m, v);
  }
  return m;
}

PatternSet PatternSet::reversed() const {
  std::vector<Composition> rev;
  rev.reserve(patterns_.size());
  for (const auto& p : patterns_) rev.push_back(p.reversed());
  return PatternSet(std::move(rev));
}

std::string PatternSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ';';
    out += patterns_[i].to_string();
  }
  return out;
}

bool includes_at(const Composition& host, const Composition& pattern,
                 std::size_t position) {
  if (position < 1 || host.length() < pattern.length() ||
      position > host.length() - pattern.length() + 1) {
    throw DomainError("offset " + std::to_string(position) +
                      " outside [1, len(host) - len(pattern) + 1]");
  }
  for (std::size_t j = 0; j < pattern.length(); ++j) {
    if (pattern[j] > host[position - 1 + j]) return false;
  }
  return true;
}

bool includes(const Composition& host, const Composition& pattern) {
  if (host.length() < pattern.length()) return false;
  for (std::size_t i = 1; i <= host.length() - pattern.length() + 1; ++i) {
    if (includes_at(host, pattern, i)) return true;
  }
  return false;
}

OccurrenceVector occurrences(const Composition& host, const PatternSet& patterns) {
  const auto count = kernels::best_count_kernel();
  OccurrenceVector out(patterns.size(), 0);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out[i] = count(host.parts(), patterns[i].parts());
  }
  return out;
}

bool avoids(const Composition& host, const PatternSet& patterns) {
  const auto count = kernels::best_count_kernel();
  for (const auto& p : patterns.patterns()) {
    if (count(host.parts(), p.parts()) != 0) return false;
  }
  return true;
}

}  // namespace compclust
