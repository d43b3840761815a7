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

#include <immintrin.h>

#include "hamred/simd/kernels.hpp"

namespace hamred::simd {

namespace {

inline __m256i reduce_once(__m256i r, __m256i p) { return _mm256_min_epu32(r, _mm256_sub_epi32(r, p)); }

inline __m256i mont_mul8(__m256i a, __m256i b, __m256i p, __m256i ninv) {
  __m256i t_even = _mm256_mul_epu32(a, b);
  __m256i t_odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  __m256i m_even = _mm256_mul_epu32(t_even, ninv);
  __m256i m_odd = _mm256_mul_epu32(t_odd, ninv);
  __m256i u_even = _mm256_srli_epi64(_mm256_add_epi64(t_even, _mm256_mul_epu32(m_even, p)), 32);
  __m256i u_odd = _mm256_add_epi64(t_odd, _mm256_mul_epu32(m_odd, p));
  __m256i r = _mm256_blend_epi32(u_even, u_odd, 0xAA);
  return reduce_once(r, p);
}

void dif_avx2(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n, const MontParams& mp) {
  const __m256i p = _mm256_set1_epi32(static_cast<int>(mp.p));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(mp.neg_inv));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i tw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    __m256i s = reduce_once(_mm256_add_epi32(a, b), p);
    __m256i d = reduce_once(_mm256_add_epi32(_mm256_sub_epi32(a, b), p), p);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(u + i), s);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), mont_mul8(d, tw, p, ninv));
  }
  if (i < n) scalar_kernels().dif_butterfly(u + i, v + i, w + i, n - i, mp);
}

void dit_avx2(std::uint32_t* u, std::uint32_t* v, const std::uint32_t* w, std::size_t n, const MontParams& mp) {
  const __m256i p = _mm256_set1_epi32(static_cast<int>(mp.p));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(mp.neg_inv));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i tw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    __m256i t = mont_mul8(b, tw, p, ninv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(u + i), reduce_once(_mm256_add_epi32(a, t), p));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i),
                        reduce_once(_mm256_add_epi32(_mm256_sub_epi32(a, t), p), p));
  }
  if (i < n) scalar_kernels().dit_butterfly(u + i, v + i, w + i, n - i, mp);
}

void pointwise_avx2(std::uint32_t* a, const std::uint32_t* b, std::size_t n, const MontParams& mp) {
  const __m256i p = _mm256_set1_epi32(static_cast<int>(mp.p));
  const __m256i ninv = _mm256_set1_epi32(static_cast<int>(mp.neg_inv));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), mont_mul8(x, y, p, ninv));
  }
  if (i < n) scalar_kernels().pointwise_mul(a + i, b + i, n - i, mp);
}

// Nibble lookup popcount, accumulated with SAD into four 64-bit lanes.
std::uint64_t popcount_and_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(x, low_mask));
    __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(x, 4), low_mask));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

void axpy_avx2(std::int64_t* y, const std::int64_t* x, std::int64_t alpha, std::size_t n) {
  const __m256i va = _mm256_set1_epi64x(alpha);
  const __m256i va_hi = _mm256_srli_epi64(va, 32);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i lo = _mm256_mul_epu32(va, vx);
    __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(va_hi, vx), _mm256_mul_epu32(va, _mm256_srli_epi64(vx, 32)));
    __m256i prod = _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_add_epi64(vy, prod));
  }
  if (i < n) scalar_kernels().axpy_i64(y + i, x + i, alpha, n - i);
}

constexpr Kernels kAvx2{Isa::avx2, dif_avx2, dit_avx2, pointwise_avx2, popcount_and_avx2, axpy_avx2};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

}  // namespace hamred::simd
