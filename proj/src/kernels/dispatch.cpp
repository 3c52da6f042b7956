// Copyright 2026 The remsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace remsim::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, detail::apply_1q_scalar, detail::apply_2q_scalar,
                                 detail::depolarize_1q_scalar, detail::depolarize_2q_scalar};
  return table;
}

const KernelTable* avx2_table() {
#if defined(REMSIM_WITH_AVX2)
  return &detail::avx2_kernels();
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(REMSIM_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect_best() {
  return (avx2_table() != nullptr && cpu_supports(Isa::Avx2)) ? Isa::Avx2 : Isa::Scalar;
}

namespace {

const KernelTable* table_for(Isa isa) {
  return isa == Isa::Avx2 ? avx2_table() : &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{table_for(detect_best())};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr || !cpu_supports(isa))
    throw std::invalid_argument("kernel ISA '" + std::string(to_string(isa)) +
                                "' not available on this build/CPU");
  current().store(t, std::memory_order_release);
}

}  // namespace remsim::kernels
