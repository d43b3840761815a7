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
#include <numeric>

#include "doctest.h"
#include "hamred/reductions.hpp"
#include "support.hpp"

using namespace hamred;
using testing::ref_score;

namespace {

// Every (x, y) in [lo, hi]^2 clipped to |x|, |y| <= 64.
void sweep(const LinearReduction& r, Int lo = -64, Int hi = 64) {
  CAPTURE(r.name);
  const Int a = static_cast<Int>(std::max<Wide>(r.lo, lo));
  const Int b = static_cast<Int>(std::min<Wide>(r.hi, hi));
  for (Int x = a; x <= b; ++x)
    for (Int y = a; y <= b; ++y) {
      CAPTURE(x);
      CAPTURE(y);
      REQUIRE(evaluate(r, x, y) == ref_score(r.source, x, y));
    }
}

// ★ on either side contributes nothing.
void star_rows(const LinearReduction& r) {
  const Int a = static_cast<Int>(std::max<Wide>(r.lo, -8));
  const Int b = static_cast<Int>(std::min<Wide>(r.hi, 8));
  CHECK(evaluate(r, kStar, kStar) == 0);
  for (Int v = a; v <= b; ++v) {
    CHECK(evaluate(r, kStar, v) == 0);
    CHECK(evaluate(r, v, kStar) == 0);
  }
}

}  // namespace

TEST_CASE("l1 to dom") {
  CHECK(evaluate(reduce_l1_to_dom(4), 3, 0) == 3);
  for (Int M : {1, 2, 3, 4, 7, 8, 64}) {
    const LinearReduction r = reduce_l1_to_dom(M);
    sweep(r);
    CHECK(r.terms.size() == 4 * (floor_log2(static_cast<std::uint64_t>(M)) + 1));
    CHECK(r.count_target(ScoreKind::dom) == r.terms.size());
    CHECK(filters_preserve_star(r));
  }
  for (Int M = 2; M <= (Int{1} << 20); M *= 2) CHECK(reduce_l1_to_dom(M).terms.size() == 4 * (floor_log2(M) + 1));
  CHECK_THROWS_AS(reduce_l1_to_dom(0), BoundError);
}

TEST_CASE("dom to ham") {
  const LinearReduction r2 = reduce_dom_to_ham(2);
  CHECK(evaluate(r2, 1, 0) == 0);
  CHECK(evaluate(r2, 1, 1) == 1);
  for (Int M : {1, 2, 5, 8, 64}) {
    const LinearReduction r = reduce_dom_to_ham(M);
    sweep(r);
    star_rows(r);
    CHECK(r.count_target(ScoreKind::ham) == floor_log2(static_cast<std::uint64_t>(M)) + 1);
    CHECK(filters_preserve_star(r));
  }
}

TEST_CASE("star elimination") {
  const LinearReduction r = eliminate_stars_ham();
  CHECK(evaluate(r, kStar, kStar) == 0);
  CHECK(evaluate(r, kStar, 5) == 0);
  CHECK(evaluate(r, 3, 5) == 1);
  CHECK(r.terms.size() == 2);
  CHECK_FALSE(r.preserves_star);
  sweep(r);
  star_rows(r);
}

TEST_CASE("thr and dom") {
  const LinearReduction t2 = reduce_thr_to_dom(2);
  CHECK(evaluate(t2, 5, 1) == 1);
  CHECK(evaluate(t2, 3, 3) == 0);
  for (Int d : {1, 2, 5, 9}) {
    const LinearReduction r = reduce_thr_to_dom(d);
    CHECK(r.terms.size() == 2);
    sweep(r);
    star_rows(r);
  }
  for (Int M : {1, 4, 16}) {
    const LinearReduction r = reduce_dom_to_thr(M + 1, M);
    CHECK(r.terms.size() == 1);
    sweep(r);
  }
  CHECK(evaluate(reduce_dom_to_thr(5, 4), 2, 3) == 1);
  CHECK_THROWS(reduce_dom_to_thr(4, 4));
  CHECK_THROWS(reduce_thr_to_dom(0));
}

TEST_CASE("ham to dom") {
  const LinearReduction r = reduce_ham_to_dom();
  CHECK(evaluate(r, 3, 3) == 0);
  CHECK(evaluate(r, 2, 5) == 1);
  CHECK(r.terms.size() == 2);
  sweep(r);
  star_rows(r);
}

TEST_CASE("half-integer identities") {
  const LinearReduction d = reduce_dom_to_l1();
  CHECK(evaluate(d, 2, 2) == 1);
  CHECK(evaluate(d, 3, 1) == 0);
  const LinearReduction h = reduce_ham_to_l1();
  CHECK(evaluate(h, 4, 4) == 0);
  bool has_half = false;
  for (const auto& t : d.terms) has_half = has_half || t.alpha.den() == 2;
  CHECK(has_half);
  for (const LinearReduction& r : {d, h, reduce_min_to_l1(), reduce_l1_to_min()}) {
    sweep(r);
    star_rows(r);
    for (const auto* part : {&r.terms, &r.constant_part})
      for (const auto& t : *part) CHECK((t.alpha.den() == 1 || t.alpha.den() == 2));
  }
  CHECK(evaluate(reduce_min_to_l1(), 3, 5) == 3);
  CHECK(evaluate(reduce_min_to_l1(), 0, 0) == 0);
  CHECK(evaluate(reduce_l1_to_min(), 3, 5) == 2);
}

TEST_CASE("weighted equality") {
  const LinearReduction one = reduce_weighted_eq_to_ham(WeightFn::table({}, 1), 1);
  CHECK(evaluate(one, 5, 5) == 1);
  const LinearReduction id = reduce_weighted_eq_to_ham(WeightFn::identity(), 7, 0, 7);
  CHECK(evaluate(id, 3, 3) == 3);
  CHECK(evaluate(id, 3, 4) == 0);
  SplitMix64 rng(17);
  for (int t = 0; t < 10; ++t) {
    std::map<Int, Int> entries;
    Int W = 0;
    for (Int x = -64; x <= 64; ++x)
      if (rng.chance(0.5)) {
        entries[x] = rng.range(0, 40);
        W = std::max(W, entries[x]);
      }
    const Int fallback = rng.range(0, 3);
    W = std::max({W, fallback, Int{1}});
    const WeightFn w = WeightFn::table(entries, fallback);
    const LinearReduction r = reduce_weighted_eq_to_ham(w, W);
    CHECK(r.count_target(ScoreKind::eq) <= floor_log2(static_cast<std::uint64_t>(W)) + 1);
    sweep(r);
    star_rows(r);
    CHECK(filters_preserve_star(r));
  }
  CHECK_THROWS(reduce_weighted_eq_to_ham(WeightFn::table({{0, -1}}, 0), 4));
}

TEST_CASE("eq to ham") {
  const LinearReduction r = reduce_eq_to_ham();
  sweep(r);
  star_rows(r);
}

TEST_CASE("axis-orthogonal piecewise to mult") {
  PiecewisePolynomial p1;
  p1.summands.push_back({Poly2::monomial(1, 1, 0), 1, 0, 0});
  CHECK(evaluate(reduce_axis_orthogonal_to_mult(p1), 3, 9) == 3);
  PiecewisePolynomial p2;
  p2.summands.push_back({Poly2::monomial(1, 1, 1), 0, 1, -2});
  const LinearReduction r2 = reduce_axis_orthogonal_to_mult(p2);
  CHECK(evaluate(r2, 2, 3) == 6);
  CHECK(evaluate(r2, 2, 1) == 0);
  PiecewisePolynomial p3;
  p3.summands.push_back({Poly2::constant(1), 1, 0, 0});
  CHECK(evaluate(reduce_axis_orthogonal_to_mult(p3), 1, 7) == 1);

  SplitMix64 rng(19);
  for (int t = 0; t < 10; ++t) {
    PiecewisePolynomial pp;
    for (int s = 0; s < 3; ++s) {
      Poly2 p;
      for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b) p.add_to(a, b, rng.range(-4, 4));
      const bool on_x = rng.chance(0.5);
      pp.summands.push_back({p, on_x ? rng.range(-3, 3) : 0, on_x ? 0 : rng.range(-3, 3), rng.range(-5, 5)});
    }
    const LinearReduction r = reduce_axis_orthogonal_to_mult(pp);
    for (const auto* part : {&r.terms, &r.constant_part})
      for (const auto& term : *part) CHECK(term.target.kind() == ScoreKind::mult);
    sweep(r, -20, 20);
    star_rows(r);
  }
  CHECK_THROWS_AS(reduce_axis_orthogonal_to_mult(ScoreFunction::dom().expansion()), ReductionError);
}

TEST_CASE("monomial dominance") {
  const LinearReduction r00 = reduce_mdom_to_ham(0, 0, 4);
  CHECK(evaluate(r00, 1, 2) == 1);
  for (Int x = 0; x < 4; ++x) CHECK(evaluate(r00, x, x) == 0);
  CHECK(evaluate(reduce_mdom_to_ham(1, 0, 8), 2, 5) == 2);
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; a + b <= 3; ++b)
      for (Int M : {1, 2, 5, 16}) {
        CAPTURE(a);
        CAPTURE(b);
        MdomStats st;
        const LinearReduction r = reduce_mdom_to_ham(a, b, M, &st);
        sweep(r);
        star_rows(r);
        CHECK(filters_preserve_star(r));
        for (const auto* part : {&r.terms, &r.constant_part})
          for (const auto& t : *part) CHECK((t.target.kind() == ScoreKind::eq || t.target.kind() == ScoreKind::mult));
        CHECK(ref_score(r.source, 1, 2) == (Wide{1} << b));
      }
}

TEST_CASE("monomial dominance term counts stay under the bound") {
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 3; ++b)
      for (unsigned m = 1; m <= 20; ++m) {
        const MdomStats st = count_mdom_terms(a, b, Int{1} << m);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(m);
        CHECK(Wide(st.eq_terms) <= mdom_term_bound(a, b, m));
      }
}

TEST_CASE("piecewise to hamming") {
  for (const ScoreFunction& f : {ScoreFunction::ham(), ScoreFunction::l1(), ScoreFunction::dom(), ScoreFunction::max(),
                                 ScoreFunction::min(), ScoreFunction::l2p1(1)}) {
    CAPTURE(f.tag());
    LinearReduction r = reduce_piecewise_to_ham(f.expansion(), 0, 15);
    r.source = f;
    sweep(r, 0, 15);
    star_rows(r);
    for (const auto* part : {&r.terms, &r.constant_part})
      for (const auto& t : *part) CHECK((t.target.kind() == ScoreKind::ham || t.target.kind() == ScoreKind::mult));
  }
  PiecewisePolynomial sq;
  sq.summands.push_back({Poly2::monomial(1, 2, 0), 1, 0, -3});
  const LinearReduction r = reduce_piecewise_to_ham(sq, 0, 15);
  CHECK(r.count_target(ScoreKind::ham) == 0);
  for (Int x = 0; x < 16; ++x) CHECK(evaluate(r, x, 0) == (x > 3 ? x * x : 0));
  const LinearReduction empty = reduce_piecewise_to_ham(PiecewisePolynomial{}, 0, 15);
  CHECK(empty.backend_calls() == 0);
  CHECK(evaluate(empty, 3, 4) == 0);
}

TEST_CASE("lowering every score to hamming") {
  for (const ScoreFunction& f :
       {ScoreFunction::ham(), ScoreFunction::dom(), ScoreFunction::thr(3), ScoreFunction::l1(), ScoreFunction::l2p(1),
        ScoreFunction::l2p1(1), ScoreFunction::min(), ScoreFunction::max(), ScoreFunction::eq(), ScoreFunction::mult(),
        ScoreFunction::weighted_eq(WeightFn::table({{2, 5}, {3, 1}}, 2))}) {
    CAPTURE(f.tag());
    const LinearReduction r = lower_to_hamming(f, -6, 9);
    sweep(r, -6, 9);
    star_rows(r);
    for (const auto* part : {&r.terms, &r.constant_part})
      for (const auto& t : *part) CHECK((t.target.kind() == ScoreKind::ham || t.target.kind() == ScoreKind::mult));
  }
}

TEST_CASE("compositions") {
  // Thr -> Dom terms shift the inputs; the composed Dom instances run on a
  // range that covers every shifted value.
  const LinearReduction outer = reduce_thr_to_dom(3);
  const LinearReduction lowered = lower_terms([&] {
    LinearReduction r = outer;
    r.lo = 0;
    r.hi = 15;
    return r;
  }());
  sweep(lowered, 0, 15);
  CHECK(lowered.count_target(ScoreKind::dom) == 0);

  LinearReduction l1 = reduce_l1_to_dom(16);
  const LinearReduction l1_ham = lower_terms(l1);
  sweep(l1_ham, 0, 15);
  CHECK(l1_ham.count_target(ScoreKind::dom) == 0);
}

TEST_CASE("grid selection for line families") {
  {
    const std::vector<Line> lines = {{-1, 1, 1}};
    const GridParams g = lines_lemma_select(lines, 4);
    CHECK(g.index == 0);
    CHECK(verify_grid(lines, g, 4));
  }
  {
    const std::vector<Line> lines = {{-1, 1, 0}, {-1, 1, 1}};
    const GridParams g = lines_lemma_select(lines, 10);
    CHECK(verify_grid(lines, g, 10));
  }
  {
    const std::vector<Line> lines = {{1, 0, -2}, {2, -3, 1}};
    CHECK(lines_lemma_select(lines, 6).index == 1);
  }
  CHECK_THROWS_AS(lines_lemma_select({{1, 0, 0}, {0, 1, 0}}, 5), ReductionError);

  // Direct geometric check on random line sets.
  SplitMix64 rng(23);
  for (int t = 0; t < 40; ++t) {
    std::vector<Line> lines;
    const int c = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < c; ++i) lines.push_back({rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3)});
    lines.push_back({rng.range(1, 3) * (rng.chance(0.5) ? 1 : -1), rng.range(1, 3), rng.range(-3, 3)});
    const Wide N = 6;
    const GridParams g = lines_lemma_select(lines, N);
    const Line& L = lines[g.index];
    REQUIRE(L.A != 0);
    REQUIRE(L.B != 0);
    for (const Line& l : lines) {
      const bool parallel = Wide{l.A} * L.B == Wide{l.B} * L.A;
      int seen[3] = {-1, -1, -1};  // whole grid, x > y, x < y
      for (Wide x = 0; x <= N; ++x)
        for (Wide y = 0; y <= N; ++y) {
          const Wide v = l.A * (g.alpha * x + g.gamma) + l.B * (g.beta * y + g.delta) + l.C;
          if (&l == &L && x == y && std::gcd(L.A, L.B) == 1) REQUIRE(v == 0);
          const int side = !parallel ? 0 : (x > y ? 1 : (x < y ? 2 : -1));
          if (side < 0) continue;
          const int ind = v > 0 ? 1 : 0;
          if (seen[side] < 0) seen[side] = ind;
          REQUIRE(seen[side] == ind);
        }
    }
    CHECK(verify_grid(lines, g, N));
  }
}

TEST_CASE("hamming from a piecewise score") {
  std::vector<ScoreFunction> sources = {ScoreFunction::dom(), ScoreFunction::l1(), ScoreFunction::max(),
                                        ScoreFunction::ham(), ScoreFunction::thr(2)};
  for (const ScoreFunction& f : sources) {
    CAPTURE(f.tag());
    const HamToPiecewisePlan plan = reduce_ham_to_piecewise(f.expansion(), 12);
    CHECK(plan.dom_plan.count_target(ScoreKind::piecewise) > 0);
    for (Int x = 0; x <= 12; ++x)
      for (Int y = 0; y <= 12; ++y) REQUIRE(evaluate(plan.dom_plan, x, y) == (x <= y ? 1 : 0));
    for (Int x = 0; x < 12; ++x)
      for (Int y = 0; y < 12; ++y) REQUIRE(evaluate(plan.ham_plan, x, y) == (x != y ? 1 : 0));
  }
  CHECK_THROWS_AS(reduce_ham_to_piecewise(ScoreFunction::mult().expansion(), 4), ReductionError);
}

TEST_CASE("engine identity and operator lifting") {
  SplitMix64 rng(29);
  const SolverRegistry naive = naive_registry();
  const SolverRegistry fast = fast_registry();
  for (int t = 0; t < 6; ++t) {
    const ExtVector a = testing::random_vec(rng, 12, 0, 7, 0.25);
    const ExtVector b = testing::random_vec(rng, 12, 0, 7, 0.25);
    const ExtVector p = testing::random_vec(rng, 5, 0, 7, 0.25);
    const ExtMatrix A = testing::random_mat(rng, 4, 6, 0, 7, 0.25);
    const ExtMatrix B = testing::random_mat(rng, 6, 3, 0, 7, 0.25);
    for (const ScoreFunction& f : {ScoreFunction::ham(), ScoreFunction::l1(), ScoreFunction::dom(), ScoreFunction::max(),
                                   ScoreFunction::thr(3)}) {
      CAPTURE(f.tag());
      const LinearReduction id = identity_reduction(f);
      CHECK(apply_reduction(id, Product::conv, testing::row(a), testing::row(b), naive) ==
            testing::ref_conv(f, a, b));
      const LinearReduction r = lower_to_hamming(f, 0, 7);
      for (const SolverRegistry* reg : {&naive, &fast}) {
        CHECK(apply_reduction(r, Product::vprod, testing::row(a), testing::row(b), *reg) ==
              WideVector{testing::ref_vprod(f, a, b)});
        CHECK(apply_reduction(r, Product::conv, testing::row(a), testing::row(b), *reg) == testing::ref_conv(f, a, b));
        CHECK(apply_reduction(r, Product::mprod, A, B, *reg) == testing::ref_mprod(f, A, B));
        CHECK(apply_reduction(r, Product::pm, testing::row(p), testing::row(a), *reg) == testing::ref_pm(f, a, p));
      }
    }
  }
  {
    const ExtMatrix A(4, 4, testing::random_vec(rng, 16, -3, 3));
    const ExtMatrix B(4, 4, testing::random_vec(rng, 16, -3, 3));
    CHECK(apply_reduction(reduce_ham_to_dom(), Product::mprod, A, B, naive) ==
          testing::ref_mprod(ScoreFunction::ham(), A, B));
    CHECK(apply_reduction(reduce_l1_to_dom(4), Product::vprod, testing::row(testing::ev({3})),
                          testing::row(testing::ev({0})), naive) == WideVector{3});
  }
}

TEST_CASE("engine shifting, stats, and errors") {
  const SolverRegistry naive = naive_registry();
  const ExtVector a = testing::ev({10, 12, testing::S, 13});
  const ExtVector b = testing::ev({11, 10, 10, 15});
  EngineStats st;
  const LinearReduction r = reduce_dom_to_ham(8);
  CHECK(apply_reduction(r, Product::conv, testing::row(a), testing::row(b), naive, {}, &st) ==
        testing::ref_conv(ScoreFunction::dom(), a, b));
  CHECK(st.applied_shift == -10);
  CHECK(st.backend_calls == r.backend_calls());
  CHECK(st.calls_by_target["ham"] == r.count_target(ScoreKind::ham));
  CHECK_THROWS_AS(apply_reduction(r, Product::conv, testing::row(a), testing::row(b), naive, {1, false}),
                  BoundError);
  CHECK_THROWS_AS(apply_reduction(reduce_dom_to_ham(2), Product::conv, testing::row(a), testing::row(b), naive),
                  BoundError);

  LinearReduction half;
  half.source = ScoreFunction::ham();
  half.terms.push_back({Rational(1, 2), ScoreFunction::ham(), {}, {}});
  CHECK_THROWS_AS(apply_reduction(half, Product::vprod, testing::row(testing::ev({1})), testing::row(testing::ev({2})),
                                  naive),
                  ReductionError);

  SolverRegistry only_ham;
  only_ham.add(ScoreKind::ham, naive_product);
  CHECK_THROWS_AS(apply_reduction(reduce_l1_to_dom(4), Product::vprod, testing::row(testing::ev({1})),
                                  testing::row(testing::ev({2})), only_ham),
                  ReductionError);

  // Threaded evaluation combines in term order and matches the serial result.
  SplitMix64 rng(31);
  const ExtVector x = testing::random_vec(rng, 40, 0, 31, 0.1);
  const ExtVector y = testing::random_vec(rng, 40, 0, 31, 0.1);
  const LinearReduction l1 = lower_to_hamming(ScoreFunction::l1(), 0, 31);
  CHECK(apply_reduction(l1, Product::conv, testing::row(x), testing::row(y), fast_registry(), {4, true}) ==
        testing::ref_conv(ScoreFunction::l1(), x, y));
}

TEST_CASE("serialization round trip") {
  std::vector<LinearReduction> all = {reduce_l1_to_dom(8),    reduce_dom_to_ham(8),   eliminate_stars_ham(),
                                      reduce_thr_to_dom(3),   reduce_ham_to_l1(),     reduce_min_to_l1(),
                                      reduce_mdom_to_ham(1, 1, 4),
                                      reduce_weighted_eq_to_ham(WeightFn::table({{1, 3}}, 1), 3),
                                      reduce_ham_to_piecewise(ScoreFunction::max().expansion(), 4).ham_plan};
  for (const LinearReduction& r : all) {
    CAPTURE(r.name);
    const std::string text = serialize(r);
    const LinearReduction back = deserialize(text);
    CHECK(serialize(back) == text);
    for (Int x = 0; x < 4; ++x)
      for (Int y = 0; y < 4; ++y) REQUIRE(evaluate(back, x, y) == evaluate(r, x, y));
  }
  CHECK_THROWS_AS(deserialize("reduction x\nsource ham\n"), ParseError);
  try {
    deserialize("reduction x\nsource ham\ndomain 0 3\nstar preserves\nterms 1\n1 1 ham id\nconstant 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
  CHECK_THROWS_AS(deserialize("reduction x\nsource ham\ndomain 0 3\nstar maybe\nterms 0\nconstant 0\n"), ParseError);
}

TEST_CASE("simplify merges duplicate terms") {
  LinearReduction r;
  r.source = ScoreFunction::ham();
  r.terms.push_back({Rational(1), ScoreFunction::ham(), {}, {}});
  r.terms.push_back({Rational(2), ScoreFunction::ham(), {}, {}});
  r.terms.push_back({Rational(-3), ScoreFunction::dom(), {}, {}});
  r.terms.push_back({Rational(3), ScoreFunction::dom(), {}, {}});
  r.terms.push_back({Rational(1), ScoreFunction::ham(), FilterChain().then(FilterFn::even()).then(FilterFn::odd()), {}});
  simplify(r);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].alpha == Rational(3));
}
