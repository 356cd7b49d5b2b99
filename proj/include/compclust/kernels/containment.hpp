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
#include <span>
#include <string_view>

// Dominated-window counting: the inner loop of every containment query and of
// the exhaustive oracles. A window of `host` at offset i is dominated by
// `pattern` when pattern[j] <= host[i + j] for all j.
//
// The scalar kernel is the reference; the AVX2 kernel tests eight offsets per
// step. Both must return identical results for every input.
namespace compclust::kernels {

enum class Isa { scalar, avx2 };

using CountKernel = std::size_t (*)(std::span<const int> host,
                                    std::span<const int> pattern);

std::size_t count_dominated_scalar(std::span<const int> host,
                                   std::span<const int> pattern);

#if defined(COMPCLUST_HAVE_AVX2_KERNEL)
std::size_t count_dominated_avx2(std::span<const int> host,
                                 std::span<const int> pattern);
#endif

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

// Kernel for `isa`; falls back to scalar when unavailable.
CountKernel count_kernel(Isa isa);

// Widest available ISA, chosen once per process. Setting COMPCLUST_ISA=scalar
// in the environment forces the reference kernel.
Isa best_isa();
CountKernel best_count_kernel();

std::string_view isa_name(Isa isa);

}  // namespace compclust::kernels
