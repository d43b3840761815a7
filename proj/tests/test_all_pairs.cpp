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

#include "doctest.h"
#include "hamred/all_pairs.hpp"
#include "hamred/oracle.hpp"
#include "support.hpp"

using namespace hamred;
using testing::ev;
using testing::ref_ap;
using testing::S;

namespace {

ExtMatrix rows(std::size_t r, std::size_t c, std::initializer_list<Int> xs) { return ExtMatrix(r, c, ev(xs)); }

DenseMatrix from_wide(std::size_t r, std::size_t c, const WideVector& v) {
  DenseMatrix out(r, c);
  for (std::size_t i = 0; i < v.size(); ++i) out.data[i] = static_cast<Int>(v[i]);
  return out;
}

}  // namespace

TEST_CASE("naive all-pairs") {
  const ExtMatrix u = rows(3, 2, {1, 2, 3, 4, 5, S});
  const DenseMatrix self = ap_naive({u, u, ScoreFunction::ham()});
  for (std::size_t i = 0; i < 3; ++i) CHECK(self.at(i, i) == 0);
  const DenseMatrix d = ap_naive({rows(2, 1, {0, 5}), rows(1, 1, {3}), ScoreFunction::dom()});
  CHECK(d == DenseMatrix(2, 1, IntVector{1, 0}));
  SplitMix64 rng(201);
  const ExtMatrix l = testing::random_mat(rng, 8, 6, -9, 9);
  const ExtMatrix r = testing::random_mat(rng, 8, 6, -9, 9);
  CHECK(ap_naive({l, r, ScoreFunction::l1()}) == from_wide(8, 8, testing::ref_mprod(ScoreFunction::l1(), l, r.transposed())));
  CHECK_THROWS_AS(ap_naive({l, rows(1, 2, {1, 1}), ScoreFunction::ham()}), DimensionError);
}

TEST_CASE("all-pairs hamming through expansion") {
  SplitMix64 rng(203);
  {
    const ExtMatrix u = testing::random_mat(rng, 10, 7, 0, 3);
    const DenseMatrix o = apham_via_expansion(u, u);
    for (std::size_t i = 0; i < 10; ++i) CHECK(o.at(i, i) == 0);
  }
  {
    const ExtMatrix l = testing::random_mat(rng, 32, 16, 0, 7);
    const ExtMatrix r = testing::random_mat(rng, 32, 16, 0, 7);
    ApHamStats st;
    CHECK(apham_via_expansion(l, r, {}, &st) == ref_ap(ScoreFunction::ham(), l, r));
    CHECK(st.ell == std::min<std::size_t>(16 * 16, st.expansion_width));
    CHECK(apham_via_expansion(l, r, {false, 0}) == ref_ap(ScoreFunction::ham(), l, r));
  }
  {
    const ExtMatrix l = testing::random_mat(rng, 32, 16, 0, 7, 0.5);
    const ExtMatrix r = testing::random_mat(rng, 32, 16, 0, 7, 0.5);
    CHECK(apham_via_expansion(l, r) == ref_ap(ScoreFunction::ham(), l, r));
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n1 = static_cast<std::size_t>(rng.range(1, 64));
    const std::size_t n2 = static_cast<std::size_t>(rng.range(1, 64));
    const std::size_t d = static_cast<std::size_t>(rng.range(1, 32));
    const Int alphabet = rng.range(1, 2 * static_cast<Int>(n1 + n2));
    const double stars = (t % 3) * 0.25;
    const ExtMatrix l = testing::random_mat(rng, n1, d, -alphabet, alphabet, stars);
    const ExtMatrix r = testing::random_mat(rng, n2, d, -alphabet, alphabet, stars);
    const DenseMatrix want = ref_ap(ScoreFunction::ham(), l, r);
    const std::size_t ell = static_cast<std::size_t>(rng.range(0, 40));
    REQUIRE(apham_via_expansion(l, r, {true, ell}) == want);
    REQUIRE(apham_via_expansion(l, r, {false, 0}) == want);
  }
}

TEST_CASE("overlap counts") {
  const ExtMatrix l = rows(2, 3, {1, S, 2, S, S, S});
  const ExtMatrix r = rows(2, 3, {S, 4, 4, 9, 9, 9});
  CHECK(overlap_counts(l, r) == DenseMatrix(2, 2, IntVector{1, 2, 0, 0}));
}

TEST_CASE("generic all-pairs through reductions") {
  SplitMix64 rng(207);
  const SolverRegistry fast = fast_registry();
  {
    const ExtMatrix l = testing::random_mat(rng, 16, 8, 0, 15);
    const ExtMatrix r = testing::random_mat(rng, 16, 8, 0, 15);
    const ApInstance dom{l, r, ScoreFunction::dom()};
    EngineStats st;
    const LinearReduction plan = reduce_dom_to_ham(16);
    CHECK(generic_ap(dom, plan, fast, {}, &st) == ref_ap(dom.score, l, r));
    CHECK(st.backend_calls == plan.backend_calls());
    const ApInstance l3{l, r, ScoreFunction::l2p1(1)};
    CHECK(generic_ap(l3, lower_to_hamming(l3.score, 0, 15), fast) == ref_ap(l3.score, l, r));
    LinearReduction mx = reduce_piecewise_to_ham(ScoreFunction::max().expansion(), 0, 15);
    mx.source = ScoreFunction::max();
    const ApInstance max{l, r, ScoreFunction::max()};
    CHECK(generic_ap(max, mx, fast) == ref_ap(max.score, l, r));
    CHECK_THROWS_AS(generic_ap(max, plan, fast), ReductionError);
  }
  const std::vector<ScoreFunction> scores = {ScoreFunction::dom(), ScoreFunction::thr(3), ScoreFunction::l1(),
                                             ScoreFunction::l2p1(1), ScoreFunction::max()};
  for (int t = 0; t < 100; ++t) {
    const ScoreFunction& f = scores[static_cast<std::size_t>(t) % scores.size()];
    CAPTURE(f.tag());
    const std::size_t n1 = static_cast<std::size_t>(rng.range(1, 64));
    const std::size_t n2 = static_cast<std::size_t>(rng.range(1, 64));
    const std::size_t d = static_cast<std::size_t>(rng.range(1, 32));
    const ExtMatrix l = testing::random_mat(rng, n1, d, 0, 15, t % 2 ? 0.4 : 0.0);
    const ExtMatrix r = testing::random_mat(rng, n2, d, 0, 15, t % 2 ? 0.4 : 0.0);
    const ApInstance inst{l, r, f};
    REQUIRE(generic_ap(inst, lower_to_hamming(f, 0, 15), fast) == ref_ap(f, l, r));
  }
}

TEST_CASE("all-pairs hamming for sparse inputs") {
  SplitMix64 rng(211);
  {
    const ExtMatrix l(5, 4, kStar);
    const ExtMatrix r(3, 4, kStar);
    CHECK(apham_sparse_inputs(l, r) == DenseMatrix(5, 3));
  }
  {
    const ExtMatrix l = testing::random_mat(rng, 20, 10, 0, 5);
    const ExtMatrix r = testing::random_mat(rng, 20, 10, 0, 5);
    CHECK(apham_sparse_inputs(l, r) == apham_via_expansion(l, r));
  }
  {
    const ExtMatrix l = testing::random_mat(rng, 64, 32, 0, 9, 0.95);
    const ExtMatrix r = testing::random_mat(rng, 64, 32, 0, 9, 0.95);
    CHECK(apham_sparse_inputs(l, r) == ref_ap(ScoreFunction::ham(), l, r));
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 64));
    const std::size_t d = static_cast<std::size_t>(rng.range(1, 32));
    const double stars = 0.5 + 0.49 * rng.chance(0.5);
    const ExtMatrix l = testing::random_mat(rng, n, d, 0, 6, stars);
    const ExtMatrix r = testing::random_mat(rng, n, d, 0, 6, stars);
    ApHamStats st;
    REQUIRE(apham_sparse_inputs(l, r, &st) == ref_ap(ScoreFunction::ham(), l, r));
  }
}
