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

#include <cstdlib>
#include <string_view>

#include "compclust/kernels/containment.hpp"

namespace compclust::kernels {

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(COMPCLUST_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

CountKernel count_kernel(Isa isa) {
#if defined(COMPCLUST_HAVE_AVX2_KERNEL)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) return &count_dominated_avx2;
#endif
  (void)isa;
  return &count_dominated_scalar;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (const char* forced = std::getenv("COMPCLUST_ISA");
        forced != nullptr && std::string_view(forced) == "scalar") {
      return Isa::scalar;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

CountKernel best_count_kernel() { return count_kernel(best_isa()); }

std::string_view isa_name(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

}  // namespace compclust::kernels
