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

#include "compclust/roots.hpp"

#include <vector>

#include "compclust/errors.hpp"

namespace compclust {

namespace {

std::vector<upoly::Dense> sturm_chain(const upoly::Dense& sf) {
  std::vector<upoly::Dense> chain{sf, upoly::derivative(sf)};
  while (!chain.back().empty() && upoly::degree(chain.back()) > 0) {
    auto rem = upoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.empty()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    auto prim = upoly::primitive(rem);
    if ((prim.back() < 0) != (rem.back() < 0)) prim = upoly::scale(prim, -1);
    chain.push_back(upoly::scale(prim, -1));
  }
  return chain;
}

int sign_variations(const std::vector<upoly::Dense>& chain, const BigRational& at) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = upoly::sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

class RootCounter {
 public:
  explicit RootCounter(const upoly::Dense& p)
      : sf_(upoly::square_free_part(p)), chain_(sturm_chain(sf_)) {}

  // Distinct roots in (lo, hi].
  int count(const BigRational& lo, const BigRational& hi) const {
    return sign_variations(chain_, lo) - sign_variations(chain_, hi);
  }
  const upoly::Dense& square_free() const { return sf_; }

 private:
  upoly::Dense sf_;
  std::vector<upoly::Dense> chain_;
};

}  // namespace

int count_real_roots(const upoly::Dense& p, const BigRational& lo,
                     const BigRational& hi) {
  if (upoly::degree(p) <= 0) return 0;
  return RootCounter(p).count(lo, hi);
}

RationalInterval smallest_positive_real_root(const Polynomial& p,
                                             unsigned precision_bits,
                                             std::string_view var) {
  const upoly::Dense dense = upoly::from_polynomial(p, var);
  if (dense.empty() || dense[0] == 0) {
    throw DomainError("root search needs p(0) != 0");
  }
  if (upoly::degree(dense) == 0) {
    throw DomainError("constant polynomial has no root in (0, 1]");
  }
  RootCounter counter(dense);
  const auto& sf = counter.square_free();

  BigRational lo = 0;
  BigRational hi = 1;
  if (counter.count(lo, hi) == 0) {
    throw DomainError("no root in (0, 1]");
  }
  // Narrow until (lo, hi] holds exactly one root, always keeping the
  // leftmost one.
  while (counter.count(lo, hi) > 1) {
    BigRational mid = (lo + hi) / 2;
    if (counter.count(lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (upoly::sign_at(sf, hi) == 0) return {hi, hi};

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, precision_bits);
  const BigRational tolerance = make_rational(1, scale);
  int sign_lo = upoly::sign_at(sf, lo);
  while (hi - lo > tolerance) {
    BigRational mid = (lo + hi) / 2;
    int s = upoly::sign_at(sf, mid);
    if (s == 0) return {mid, mid};
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace compclust
