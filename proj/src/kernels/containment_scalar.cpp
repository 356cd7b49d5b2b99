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

#include "compclust/kernels/containment.hpp"

namespace compclust::kernels {

std::size_t count_dominated_scalar(std::span<const int> host,
                                   std::span<const int> pattern) {
  const std::size_t k = host.size();
  const std::size_t a = pattern.size();
  if (a == 0 || k < a) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + a <= k; ++i) {
    std::size_t j = 0;
    while (j < a && pattern[j] <= host[i + j]) ++j;
    count += j == a;
  }
  return count;
}

}  // namespace compclust::kernels
