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

#include "hamred/simd/kernels.hpp"

namespace hamred::simd {

MontParams MontParams::make(std::uint32_t p) {
  MontParams mp;
  mp.p = p;
  std::uint32_t inv = p;  // Newton iteration for p^{-1} mod 2^32
  for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
  mp.neg_inv = 0u - inv;
  const unsigned __int128 r2 = (static_cast<unsigned __int128>(1) << 64) % p;
  mp.r2 = static_cast<std::uint32_t>(r2);
  return mp;
}

namespace {

void dif_scalar(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n, const MontParams& mp) {
  const std::uint32_t p = mp.p;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = u[i];
    std::uint32_t b = v[i];
    std::uint32_t s = a + b;
    u[i] = s >= p ? s - p : s;
    std::uint32_t d = a >= b ? a - b : a + p - b;
    v[i] = mp.mul(d, w[i]);
  }
}

void dit_scalar(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n, const MontParams& mp) {
  const std::uint32_t p = mp.p;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = u[i];
    std::uint32_t t = mp.mul(v[i], w[i]);
    std::uint32_t s = a + t;
    u[i] = s >= p ? s - p : s;
    v[i] = a >= t ? a - t : a + p - t;
  }
}

void pointwise_scalar(std::uint32_t* a, const std::uint32_t* b, std::size_t n, const MontParams& mp) {
  for (std::size_t i = 0; i < n; ++i) a[i] = mp.mul(a[i], b[i]);
}

std::uint64_t popcount_and_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

void axpy_scalar(std::int64_t* y, const std::int64_t* x, std::int64_t alpha, std::size_t n) {
  const std::uint64_t ua = static_cast<std::uint64_t>(alpha);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(y[i]) + ua * static_cast<std::uint64_t>(x[i]));
}

constexpr Kernels kScalar{Isa::scalar, dif_scalar, dit_scalar, pointwise_scalar, popcount_and_scalar, axpy_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace hamred::simd
