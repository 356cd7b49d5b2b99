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

#include <random>

#include <gtest/gtest.h>

#include "compclust/kernels/containment.hpp"
#include "oracles.hpp"

namespace compclust::kernels {
namespace {

using compclust::testing::Parts;

Parts random_parts(std::mt19937_64& rng, std::size_t len, int max_part) {
  std::uniform_int_distribution<int> d(1, max_part);
  Parts p(len);
  for (auto& v : p) v = d(rng);
  return p;
}

TEST(KernelTest, ScalarMatchesNaive) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4000; ++trial) {
    const Parts host = random_parts(rng, rng() % 40, 5);
    const Parts pat = random_parts(rng, 1 + rng() % 5, 4);
    EXPECT_EQ(count_dominated_scalar(host, pat), compclust::testing::naive_count(host, pat));
  }
}

TEST(KernelTest, PatternLongerThanHost) {
  const Parts host{5, 5};
  const Parts pat{1, 1, 1};
  EXPECT_EQ(count_dominated_scalar(host, pat), 0u);
  EXPECT_EQ(count_kernel(best_isa())(host, pat), 0u);
}

#if defined(COMPCLUST_HAVE_AVX2_KERNEL)
TEST(KernelTest, Avx2MatchesScalar) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    const Parts host = random_parts(rng, rng() % 70, 6);
    const Parts pat = random_parts(rng, 1 + rng() % 6, 5);
    ASSERT_EQ(count_dominated_avx2(host, pat), count_dominated_scalar(host, pat))
        << "trial " << trial;
  }
}

TEST(KernelTest, Avx2LaneBoundaries) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  // Hosts whose offset count straddles multiples of the 8-lane step.
  for (std::size_t len = 1; len <= 34; ++len) {
    const Parts host(len, 3);
    for (std::size_t plen = 1; plen <= 4; ++plen) {
      const Parts pat(plen, 2);
      EXPECT_EQ(count_dominated_avx2(host, pat), count_dominated_scalar(host, pat))
          << len << " " << plen;
      EXPECT_EQ(count_dominated_avx2(host, pat), len >= plen ? len - plen + 1 : 0u);
    }
  }
}
#endif

TEST(KernelTest, DispatchNames) {
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
  EXPECT_EQ(isa_name(Isa::avx2), "avx2");
  EXPECT_TRUE(isa_available(Isa::scalar));
  EXPECT_EQ(count_kernel(Isa::scalar), &count_dominated_scalar);
}

}  // namespace
}  // namespace compclust::kernels
