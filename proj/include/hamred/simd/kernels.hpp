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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hamred::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Montgomery constants for an odd modulus p < 2^30.
struct MontParams {
  std::uint32_t p = 0;
  std::uint32_t neg_inv = 0;  // -p^{-1} mod 2^32
  std::uint32_t r2 = 0;       // 2^64 mod p

  static MontParams make(std::uint32_t p);

  /// a * b * 2^{-32} mod p, result in [0, p).
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t t = static_cast<std::uint64_t>(a) * b;
    std::uint32_t m = static_cast<std::uint32_t>(t) * neg_inv;
    std::uint64_t u = (t + static_cast<std::uint64_t>(m) * p) >> 32;
    return static_cast<std::uint32_t>(u >= p ? u - p : u);
  }
  /// Montgomery form of a plain residue.
  std::uint32_t to_mont(std::uint32_t a) const { return mul(a, r2); }
};

/// Function table for the hot loops. Every variant must produce bit-identical
/// results to the scalar entries; the tests compare them directly.
struct Kernels {
  Isa isa;
  // Decimation-in-frequency layer: u' = u + v, v' = (u - v) * w. `w` holds
  // Montgomery-form twiddles; u, v are canonical residues.
  void (*dif_butterfly)(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n,
                        const MontParams& mp);
  // Decimation-in-time layer: t = v * w, u' = u + t, v' = u - t.
  void (*dit_butterfly)(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n,
                        const MontParams& mp);
  // a[i] = a[i] * b[i] * 2^{-32} mod p.
  void (*pointwise_mul)(std::uint32_t* a, const std::uint32_t* b, std::size_t n, const MontParams& mp);
  // Σ popcount(a[i] & b[i]).
  std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // y[i] += alpha * x[i], wrapping two's complement (callers bound-check first).
  void (*axpy_i64)(std::int64_t* y, const std::int64_t* x, std::int64_t alpha, std::size_t n);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in.
const Kernels* avx2_kernels();

bool isa_available(Isa isa);

/// Best available ISA, unless HAMRED_ISA=scalar|avx2 says otherwise.
const Kernels& active();
Isa active_isa();
/// Forces a variant; throws if it is unavailable on this machine.
void set_isa(Isa isa);

}  // namespace hamred::simd
