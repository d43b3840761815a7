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

#include <algorithm>

#include "hamred/numerics.hpp"

namespace hamred {

IntVector star_to_zero(ExtSpan v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].is_star() ? 0 : v[i].value();
  return out;
}

WideVector conv_schoolbook(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) throw DimensionError("convolution of an empty vector");
  WideVector c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], Wide{a[i]} * b[j]);
  }
  return c;
}

namespace {

constexpr std::size_t kSchoolbookCutoff = 48;

Wide max_abs(std::span<const Int> v) {
  Wide m = 0;
  for (Int x : v) m = std::max(m, wide_abs(x));
  return m;
}

std::vector<std::uint32_t> residues(std::span<const Int> v, std::size_t size, std::uint32_t p) {
  std::vector<std::uint32_t> r(size, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int m = v[i] % static_cast<Int>(p);
    r[i] = static_cast<std::uint32_t>(m < 0 ? m + p : m);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

WideVector conv_mult(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) throw DimensionError("convolution of an empty vector");
  const std::size_t out_len = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= kSchoolbookCutoff) return conv_schoolbook(a, b);
  const Wide bound =
      checked_mul(checked_mul(max_abs(a), max_abs(b)), static_cast<Wide>(std::min(a.size(), b.size())));
  if (bound == 0) return WideVector(out_len, 0);

  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  const Wide p0 = ntt::kPrimes[0];
  const Wide p1 = ntt::kPrimes[1];
  const Wide p2 = ntt::kPrimes[2];
  const Wide all = p0 * p1 * p2;

  WideVector c(out_len);
  if (2 * bound < p0) {
    auto r = ntt::cyclic_convolution(residues(a, n, ntt::kPrimes[0]), residues(b, n, ntt::kPrimes[0]), 0);
    for (std::size_t k = 0; k < out_len; ++k) c[k] = r[k] > p0 / 2 ? Wide{r[k]} - p0 : Wide{r[k]};
    return c;
  }
  if (2 * bound >= all) throw BoundError("convolution result may exceed the exact residue range");

  std::vector<std::uint32_t> r[3];
  for (unsigned q = 0; q < 3; ++q)
    r[q] = ntt::cyclic_convolution(residues(a, n, ntt::kPrimes[q]), residues(b, n, ntt::kPrimes[q]), q);

  const std::uint64_t inv_p0_mod_p1 = inv_mod(ntt::kPrimes[0], ntt::kPrimes[1]);
  const std::uint64_t inv_p01_mod_p2 =
      inv_mod(static_cast<std::uint64_t>((p0 % p2) * (p1 % p2) % p2), ntt::kPrimes[2]);
  for (std::size_t k = 0; k < out_len; ++k) {
    const Wide v0 = r[0][k];
    const Wide v1 = ((Wide{r[1][k]} - v0 % p1 + p1) % p1) * inv_p0_mod_p1 % p1;
    const Wide partial = (v0 + v1 * p0) % p2;
    const Wide v2 = ((Wide{r[2][k]} - partial + p2) % p2) * inv_p01_mod_p2 % p2;
    Wide x = v0 + v1 * p0 + v2 * p0 * p1;
    if (x > all / 2) x -= all;
    c[k] = x;
  }
  return c;
}

}  // namespace hamred
