// Copyright 2026 The hamred Authors
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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "hamred/common.hpp"
#include "hamred/simd/kernels.hpp"

namespace hamred::simd {

#ifndef HAMRED_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  if (avx2_kernels() == nullptr) return false;
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const Kernels* table_for(Isa isa) { return isa == Isa::avx2 ? avx2_kernels() : &scalar_kernels(); }

const Kernels* initial() {
  if (const char* env = std::getenv("HAMRED_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::avx2)) return avx2_kernels();
  }
  return isa_available(Isa::avx2) ? avx2_kernels() : &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> current{initial()};
  return current;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw Error("instruction set " + std::string(isa_name(isa)) + " is not available");
  slot().store(table_for(isa), std::memory_order_release);
}

}  // namespace hamred::simd
