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

// Built with -mavx2. Only reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include "compclust/kernels/containment.hpp"

namespace compclust::kernels {

std::size_t count_dominated_avx2(std::span<const int> host,
                                 std::span<const int> pattern) {
  const std::size_t k = host.size();
  const std::size_t a = pattern.size();
  if (a == 0 || k < a) return 0;
  const std::size_t windows = k - a + 1;
  const int* h = host.data();

  std::size_t count = 0;
  std::size_t i = 0;
  // Lane l of the accumulator tracks the window at offset i + l; a lane stays
  // set while pattern[j] <= host[i + l + j] for every j seen so far.
  for (; i + 8 <= windows; i += 8) {
    __m256i alive = _mm256_set1_epi32(-1);
    for (std::size_t j = 0; j < a; ++j) {
      const __m256i row =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(h + i + j));
      const __m256i need = _mm256_set1_epi32(pattern[j]);
      alive = _mm256_andnot_si256(_mm256_cmpgt_epi32(need, row), alive);
    }
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(alive));
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < windows; ++i) {
    std::size_t j = 0;
    while (j < a && pattern[j] <= h[i + j]) ++j;
    count += j == a;
  }
  return count;
}

}  // namespace compclust::kernels
