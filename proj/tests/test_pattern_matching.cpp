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

#include <cmath>

#include "doctest.h"
#include "hamred/pattern_matching.hpp"
#include "support.hpp"

using namespace hamred;
using testing::ev;
using testing::ref_pm;
using testing::S;

namespace {

PmInstance make(ExtVector t, ExtVector p, ScoreFunction f) { return PmInstance{std::move(t), std::move(p), f}; }

// Direct double loop for position weights.
WideVector ref_weighted(ExtSpan text, ExtSpan pattern, std::span<const Int> w) {
  WideVector o(text.size() - pattern.size() + 1, 0);
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = 0; j < pattern.size(); ++j)
      if (!pattern[j].is_star() && !text[i + j].is_star() && pattern[j] != text[i + j]) o[i] += w[j];
  return o;
}

struct RandomPm {
  ExtVector text;
  ExtVector pattern;
};

RandomPm random_pm(SplitMix64& rng, std::size_t max_n, std::size_t max_m, Int alphabet, double stars) {
  const std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<Int>(max_n)));
  const std::size_t m = static_cast<std::size_t>(rng.range(1, static_cast<Int>(std::min(n, max_m))));
  return {testing::random_vec(rng, n, 0, alphabet - 1, stars), testing::random_vec(rng, m, 0, alphabet - 1, stars)};
}

}  // namespace

TEST_CASE("naive pattern matching") {
  CHECK(pm_naive(make(ev({1, 2, 3}), ev({1, 2, 3}), ScoreFunction::ham())) == WideVector{0});
  CHECK(pm_naive(make(ev({0, 1, 2, 3}), ev({9}), ScoreFunction::l1())) == WideVector{9, 8, 7, 6});
  CHECK(pm_naive(make(ev({4, 1, 7, 7, 2}), ev({S, S}), ScoreFunction::l1())) == WideVector{0, 0, 0, 0});
  CHECK_THROWS_AS(pm_naive(make(ev({1}), ev({1, 2}), ScoreFunction::ham())), DimensionError);
  CHECK_THROWS_AS(pm_naive(make(ev({1}), ev({}), ScoreFunction::ham())), DimensionError);
}

TEST_CASE("bucketed hamming pattern matching") {
  SplitMix64 rng(101);
  {
    const ExtVector t = testing::random_vec(rng, 256, 0, 3);
    const ExtVector p = testing::random_vec(rng, 64, 0, 3);
    CHECK(ham_pm_bucketed(t, p) == ref_pm(ScoreFunction::ham(), t, p));
  }
  {
    const ExtVector t(50, ExtInt(7));
    const ExtVector p(9, ExtInt(7));
    CHECK(ham_pm_bucketed(t, p) == WideVector(42, 0));
  }
  {
    ExtVector p;
    for (Int i = 0; i < 40; ++i) p.push_back(i);
    const ExtVector t = testing::random_vec(rng, 200, 0, 60);
    HamPmStats st;
    CHECK(ham_pm_bucketed(t, p, 0, &st) == ref_pm(ScoreFunction::ham(), t, p));
    CHECK(st.frequent_symbols == 0);
    CHECK(st.convolutions == 0);
  }
  CHECK(ham_pm_threshold(64) == static_cast<std::size_t>(std::ceil(std::sqrt(64 * std::log2(65.0)))));
}

TEST_CASE("bucketed hamming counters follow the threshold") {
  SplitMix64 rng(103);
  for (int t = 0; t < 100; ++t) {
    const Int alphabet = rng.range(1, 40);
    const RandomPm in = random_pm(rng, 400, 120, alphabet, t % 2 ? 0.3 : 0.0);
    const std::size_t threshold = t % 3 == 0 ? static_cast<std::size_t>(rng.range(1, 8)) : 0;
    HamPmStats st;
    REQUIRE(ham_pm_bucketed(in.text, in.pattern, threshold, &st) == ref_pm(ScoreFunction::ham(), in.text, in.pattern));
    const std::size_t tau = threshold ? threshold : ham_pm_threshold(in.pattern.size());
    CHECK(st.threshold == tau);
    // With ★ present the solver runs on two ★-free lifts.
    const bool stars = std::any_of(in.text.begin(), in.text.end(), [](ExtInt x) { return x.is_star(); }) ||
                       std::any_of(in.pattern.begin(), in.pattern.end(), [](ExtInt x) { return x.is_star(); });
    std::size_t frequent = 0;
    for (int lift = 0; lift < (stars ? 2 : 1); ++lift) {
      std::map<Int, std::size_t> freq;
      for (ExtInt v : in.pattern) {
        if (!stars) ++freq[v.value()];
        else ++freq[v.is_star() ? 0 : lift == 0 ? v.value() + 1 : 1];
      }
      for (const auto& [v, c] : freq) frequent += c > tau;
    }
    CHECK(st.frequent_symbols == frequent);
    CHECK(st.convolutions == frequent);
    CHECK(st.enumeration_steps <= (stars ? 2 : 1) * in.text.size() * tau);
  }
}

TEST_CASE("even power pattern matching by convolution") {
  CHECK(l2p_pm_fft(ev({3, 1, 4}), ev({3, 1, 4}), 1) == WideVector{0});
  CHECK(l2p_pm_fft(ev({0, 2}), ev({1}), 1) == WideVector{1, 1});
  CHECK(l2p_pm_fft(ev({S, 2}), ev({1}), 1) == WideVector{0, 1});
  CHECK_THROWS_AS(l2p_pm_fft(ev({1}), ev({1}), 0), ReductionError);
  SplitMix64 rng(107);
  {
    const ExtVector t = testing::random_vec(rng, 128, -20, 20);
    const ExtVector p = testing::random_vec(rng, 17, -20, 20);
    CHECK(l2p_pm_fft(t, p, 2) == ref_pm(ScoreFunction::l2p(2), t, p));
  }
  for (int t = 0; t < 100; ++t) {
    const unsigned p = 1 + t % 2;
    const RandomPm in = random_pm(rng, 1024, 256, 64, t % 4 < 2 ? 0.0 : 0.5);
    REQUIRE(l2p_pm_fft(in.text, in.pattern, p) == ref_pm(ScoreFunction::l2p(p), in.text, in.pattern));
  }
}

TEST_CASE("sparse dominance pattern matching") {
  SplitMix64 rng(109);
  {
    const ExtVector t = testing::random_vec(rng, 300, 0, 50);
    const ExtVector p = testing::random_vec(rng, 40, 0, 50);
    CHECK(sparse_lessthan_pm(t, p) == ref_pm(ScoreFunction::dom(), t, p));
  }
  {
    ExtVector p(20, kStar);
    p[7] = ExtInt(5);
    const ExtVector t = testing::random_vec(rng, 90, 0, 10, 0.2);
    SparsePmStats st;
    CHECK(sparse_lessthan_pm(t, p, 0, &st) == ref_pm(ScoreFunction::dom(), t, p));
    CHECK(st.buckets == 1);
    CHECK(st.convolutions == 0);
  }
  {
    const ExtVector t = testing::random_vec(rng, 512, 0, 100, 0.9);
    const ExtVector p = testing::random_vec(rng, 64, 0, 100, 0.9);
    SparsePmStats st;
    CHECK(sparse_lessthan_pm(t, p, 0, &st) == ref_pm(ScoreFunction::dom(), t, p));
    std::size_t st_count = 0;
    std::size_t sp_count = 0;
    for (ExtInt v : t) st_count += !v.is_star();
    for (ExtInt v : p) sp_count += !v.is_star();
    const std::size_t width = sp_count == 0 ? 0 : (sp_count + st.buckets - 1) / st.buckets;
    CHECK(st.intra_comparisons <= st_count * width);
  }
  for (int t = 0; t < 100; ++t) {
    const RandomPm in = random_pm(rng, 1024, 256, 200, t % 2 ? 0.5 : 0.0);
    const std::size_t k = t % 3 == 0 ? static_cast<std::size_t>(rng.range(1, 12)) : 0;
    REQUIRE(sparse_lessthan_pm(in.text, in.pattern, k) == ref_pm(ScoreFunction::dom(), in.text, in.pattern));
  }
}

TEST_CASE("position weighted hamming") {
  SplitMix64 rng(113);
  const ExtVector t = testing::random_vec(rng, 128, 0, 5, 0.2);
  const ExtVector p = testing::random_vec(rng, 30, 0, 5, 0.2);
  CHECK(weighted_ham_pm(t, p, IntVector(30, 1)) == ham_pm_bucketed(t, p));
  CHECK(weighted_ham_pm(t, p, IntVector(30, 0)) == WideVector(99, 0));
  const IntVector w = testing::random_ints(rng, 30, 0, 15);
  CHECK(weighted_ham_pm(t, p, w) == ref_weighted(t, p, w));
  CHECK_THROWS_AS(weighted_ham_pm(t, p, IntVector(30, -1)), BoundError);
  CHECK_THROWS_AS(weighted_ham_pm(t, p, IntVector(3, 1)), DimensionError);
  for (int k = 0; k < 100; ++k) {
    const RandomPm in = random_pm(rng, 1024, 256, 8, k % 2 ? 0.5 : 0.0);
    const IntVector wk = testing::random_ints(rng, in.pattern.size(), 0, rng.range(0, 1000));
    REQUIRE(weighted_ham_pm(in.text, in.pattern, wk) == ref_weighted(in.text, in.pattern, wk));
  }
}

TEST_CASE("generic pattern matching through reductions") {
  SplitMix64 rng(127);
  const SolverRegistry fast = fast_registry();
  {
    const ExtVector t = testing::random_vec(rng, 128, 0, 15);
    const ExtVector p = testing::random_vec(rng, 32, 0, 15);
    const PmInstance l3 = make(t, p, ScoreFunction::l2p1(1));
    CHECK(generic_pm(l3, lower_to_hamming(l3.score, 0, 15), fast) == ref_pm(l3.score, t, p));
    const PmInstance dom = make(t, p, ScoreFunction::dom());
    EngineStats st;
    const LinearReduction plan = reduce_dom_to_ham(16);
    CHECK(generic_pm(dom, plan, fast, {}, &st) == ref_pm(dom.score, t, p));
    CHECK(st.backend_calls == plan.backend_calls());
    LinearReduction thr = reduce_thr_to_dom(5);
    thr.lo = 0;
    thr.hi = 15;
    const PmInstance t5 = make(t, p, ScoreFunction::thr(5));
    CHECK(generic_pm(t5, lower_terms(thr), fast) == ref_pm(t5.score, t, p));
    CHECK_THROWS_AS(generic_pm(t5, plan, fast), ReductionError);
  }
  const std::vector<ScoreFunction> scores = {ScoreFunction::dom(),     ScoreFunction::thr(1), ScoreFunction::thr(5),
                                             ScoreFunction::l1(),      ScoreFunction::l2p1(1), ScoreFunction::l2p1(2),
                                             ScoreFunction::min(),     ScoreFunction::max()};
  for (int k = 0; k < 100; ++k) {
    const ScoreFunction& f = scores[static_cast<std::size_t>(k) % scores.size()];
    CAPTURE(f.tag());
    const RandomPm in = random_pm(rng, 1024, 256, 32, k % 2 ? 0.5 : 0.0);
    const PmInstance inst = make(in.text, in.pattern, f);
    const auto [lo, hi] = value_range(in.text, in.pattern);
    const LinearReduction plan = lower_to_hamming(f, lo, hi);
    EngineStats st;
    REQUIRE(generic_pm(inst, plan, fast, {}, &st) == ref_pm(f, in.text, in.pattern));
    CHECK(st.backend_calls <= plan.backend_calls());
  }
}

TEST_CASE("output length and value range") {
  SplitMix64 rng(131);
  for (int k = 0; k < 20; ++k) {
    const RandomPm in = random_pm(rng, 64, 64, 5, 0.3);
    const std::size_t len = in.text.size() - in.pattern.size() + 1;
    CHECK(ham_pm_bucketed(in.text, in.pattern).size() == len);
    CHECK(sparse_lessthan_pm(in.text, in.pattern).size() == len);
    CHECK(l2p_pm_fft(in.text, in.pattern, 1).size() == len);
  }
  CHECK(value_range(ev({S, 3, -2}), ev({7, S})) == std::pair<Int, Int>{-2, 7});
  CHECK(value_range(ev({S}), ev({S})) == std::pair<Int, Int>{0, 0});
}
