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

#include <map>
#include <memory>
#include <mutex>

#include "hamred/numerics.hpp"
#include "hamred/simd/kernels.hpp"

namespace hamred::ntt {

namespace {

constexpr std::uint32_t kGenerator = 3;

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Per-layer twiddles in Montgomery form, concatenated: layer h occupies
// [h - 1, 2h - 1).
struct Plan {
  simd::MontParams mp;
  std::size_t n = 0;
  std::vector<std::uint32_t> fwd;
  std::vector<std::uint32_t> inv;
  std::uint32_t scale = 0;  // Montgomery form of n^{-1} * 2^32
};

std::shared_ptr<const Plan> make_plan(unsigned prime, std::size_t n) {
  auto plan = std::make_shared<Plan>();
  const std::uint32_t p = kPrimes[prime];
  plan->mp = simd::MontParams::make(p);
  plan->n = n;
  plan->fwd.assign(n > 0 ? n - 1 : 0, 0);
  plan->inv.assign(n > 0 ? n - 1 : 0, 0);
  for (std::size_t h = 1; h < n; h <<= 1) {
    const std::uint32_t root = pow_mod(kGenerator, (p - 1) / (2 * h), p);
    const std::uint32_t iroot = pow_mod(root, p - 2, p);
    std::uint64_t w = 1;
    std::uint64_t iw = 1;
    for (std::size_t j = 0; j < h; ++j) {
      plan->fwd[h - 1 + j] = plan->mp.to_mont(static_cast<std::uint32_t>(w));
      plan->inv[h - 1 + j] = plan->mp.to_mont(static_cast<std::uint32_t>(iw));
      w = w * root % p;
      iw = iw * iroot % p;
    }
  }
  const std::uint32_t n_inv = pow_mod(n % p, p - 2, p);
  const std::uint32_t r_mod = static_cast<std::uint32_t>((std::uint64_t{1} << 32) % p);
  plan->scale = plan->mp.to_mont(static_cast<std::uint32_t>(std::uint64_t{n_inv} * r_mod % p));
  return plan;
}

std::shared_ptr<const Plan> plan_for(unsigned prime, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::size_t>, std::shared_ptr<const Plan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{prime, n}];
  if (!slot) slot = make_plan(prime, n);
  return slot;
}

void forward(std::vector<std::uint32_t>& a, const Plan& plan, const simd::Kernels& k) {
  const std::size_t n = plan.n;
  for (std::size_t h = n / 2; h >= 1; h >>= 1) {
    const std::uint32_t* tw = plan.fwd.data() + (h - 1);
    for (std::size_t s = 0; s < n; s += 2 * h) k.dif_butterfly(a.data() + s, a.data() + s + h, tw, h, plan.mp);
  }
}

void inverse(std::vector<std::uint32_t>& a, const Plan& plan, const simd::Kernels& k) {
  const std::size_t n = plan.n;
  for (std::size_t h = 1; h < n; h <<= 1) {
    const std::uint32_t* tw = plan.inv.data() + (h - 1);
    for (std::size_t s = 0; s < n; s += 2 * h) k.dit_butterfly(a.data() + s, a.data() + s + h, tw, h, plan.mp);
  }
}

}  // namespace

std::vector<std::uint32_t> cyclic_convolution(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                              unsigned prime) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n || (n & (n - 1)) != 0) throw DimensionError("NTT size must be an equal power of two");
  if (prime >= 3) throw DimensionError("unknown NTT prime");
  if (n > (std::size_t{1} << 23)) throw BoundError("NTT length exceeds the supported 2^23");
  auto plan = plan_for(prime, n);
  const simd::Kernels& k = simd::active();
  forward(a, *plan, k);
  forward(b, *plan, k);
  k.pointwise_mul(a.data(), b.data(), n, plan->mp);
  inverse(a, *plan, k);
  std::vector<std::uint32_t> scale(n, plan->scale);
  k.pointwise_mul(a.data(), scale.data(), n, plan->mp);
  return a;
}

}  // namespace hamred::ntt
