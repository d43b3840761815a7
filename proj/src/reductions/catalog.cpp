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

#include "hamred/reductions.hpp"

namespace hamred {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

FilterChain chain(std::initializer_list<FilterFn> fs) {
  FilterChain c;
  for (const FilterFn& f : fs) c = c.then(f);
  return c;
}

ReductionTerm term(Rational alpha, ScoreFunction target, FilterChain f, FilterChain g) {
  return {alpha, std::move(target), std::move(f), std::move(g)};
}

// ★-aware constant 1: Mult(1, 1) over non-★ pairs.
ReductionTerm mult_one(Rational alpha) {
  return term(alpha, ScoreFunction::mult(), chain({FilterFn::constant(1)}), chain({FilterFn::constant(1)}));
}

void require_positive_bound(Int M) {
  if (M <= 0) throw BoundError("reduction bound must be positive");
}

}  // namespace

LinearReduction reduce_l1_to_dom(Int M) {
  require_positive_bound(M);
  LinearReduction r;
  r.name = "l1-to-dom";
  r.source = ScoreFunction::l1();
  r.lo = 0;
  r.hi = M - 1;
  const ScoreFunction dom = ScoreFunction::dom();
  const unsigned levels = floor_log2(static_cast<std::uint64_t>(M)) + 1;
  for (unsigned i = 0; i < levels; ++i) {
    const Rational w(Wide{1} << i);
    const FilterFn shr = FilterFn::shift_right(i);
    const FilterFn neg = FilterFn::negate();
    // η(x, y) = |x - y| - 2 |⌊x/2⌋ - ⌊y/2⌋| at level i.
    r.terms.push_back(term(w, dom, chain({shr, neg, FilterFn::odd()}), chain({shr, neg, FilterFn::even()})));
    r.terms.push_back(term(-w, dom, chain({shr, neg, FilterFn::even()}), chain({shr, neg, FilterFn::odd()})));
    r.terms.push_back(term(w, dom, chain({shr, FilterFn::even()}), chain({shr, FilterFn::odd()})));
    r.terms.push_back(term(-w, dom, chain({shr, FilterFn::odd()}), chain({shr, FilterFn::even()})));
  }
  return r;
}

LinearReduction reduce_dom_to_ham(Int M) {
  require_positive_bound(M);
  LinearReduction r;
  r.name = "dom-to-ham";
  r.source = ScoreFunction::dom();
  r.lo = 0;
  r.hi = M - 1;
  const unsigned levels = floor_log2(static_cast<std::uint64_t>(M)) + 1;
  r.constant_part.push_back(mult_one(kOne));
  for (unsigned i = 0; i < levels; ++i) {
    const FilterFn shr = FilterFn::shift_right(i);
    r.terms.push_back(term(kOne, ScoreFunction::ham(), chain({shr, FilterFn::odd()}), chain({shr, FilterFn::shift(1)})));
    r.constant_part.push_back(term(-kOne, ScoreFunction::mult(), chain({shr, FilterFn::odd(), FilterFn::constant(1)}),
                                   chain({FilterFn::constant(1)})));
  }
  return r;
}

LinearReduction eliminate_stars_ham() {
  LinearReduction r;
  r.name = "eliminate-stars";
  r.source = ScoreFunction::ham();
  r.lo = 0;
  r.hi = kUnbounded - 1;
  r.preserves_star = false;
  const FilterChain f = chain({FilterFn::star_zero_succ()});
  const FilterChain g = chain({FilterFn::star_indicator()});
  r.terms.push_back(term(kOne, ScoreFunction::ham(), f, f));
  r.terms.push_back(term(-kOne, ScoreFunction::ham(), g, g));
  return r;
}

LinearReduction reduce_thr_to_dom(Int delta) {
  if (delta <= 0) throw BoundError("threshold must be positive");
  LinearReduction r;
  r.name = "thr-to-dom";
  r.source = ScoreFunction::thr(delta);
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  const ScoreFunction dom = ScoreFunction::dom();
  // Dom(y + δ, x) written with x on the left: 1[-x <= -y - δ].
  r.terms.push_back(term(kOne, dom, chain({FilterFn::negate()}), chain({FilterFn::affine(-1, -delta)})));
  r.terms.push_back(term(kOne, dom, chain({FilterFn::shift(delta)}), {}));
  return r;
}

LinearReduction reduce_dom_to_thr(Int delta, Int M) {
  require_positive_bound(M);
  if (delta <= M) throw BoundError("dom-to-thr needs delta > M");
  LinearReduction r;
  r.name = "dom-to-thr";
  r.source = ScoreFunction::dom();
  r.lo = 0;
  r.hi = M - 1;
  r.terms.push_back(term(kOne, ScoreFunction::thr(delta), {}, chain({FilterFn::shift(delta)})));
  return r;
}

LinearReduction reduce_ham_to_dom() {
  LinearReduction r;
  r.name = "ham-to-dom";
  r.source = ScoreFunction::ham();
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  const ScoreFunction dom = ScoreFunction::dom();
  r.terms.push_back(term(kOne, dom, chain({FilterFn::shift(1)}), {}));
  r.terms.push_back(term(kOne, dom, chain({FilterFn::affine(-1, 1)}), chain({FilterFn::negate()})));
  return r;
}

LinearReduction reduce_dom_to_l1() {
  LinearReduction r;
  r.name = "dom-to-l1";
  r.source = ScoreFunction::dom();
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  const ScoreFunction l1 = ScoreFunction::l1();
  r.terms.push_back(term(kHalf, l1, {}, chain({FilterFn::shift(1)})));
  r.terms.push_back(term(-kHalf, l1, {}, {}));
  r.constant_part.push_back(mult_one(kHalf));
  return r;
}

LinearReduction reduce_ham_to_l1() {
  LinearReduction r;
  r.name = "ham-to-l1";
  r.source = ScoreFunction::ham();
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  const ScoreFunction l1 = ScoreFunction::l1();
  r.terms.push_back(term(kOne, l1, {}, {}));
  r.terms.push_back(term(-kHalf, l1, {}, chain({FilterFn::shift(1)})));
  r.terms.push_back(term(-kHalf, l1, chain({FilterFn::shift(1)}), {}));
  r.constant_part.push_back(mult_one(kOne));
  return r;
}

LinearReduction reduce_min_to_l1() {
  LinearReduction r;
  r.name = "min-to-l1";
  r.source = ScoreFunction::min();
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  r.terms.push_back(term(-kHalf, ScoreFunction::l1(), {}, {}));
  r.constant_part.push_back(term(kHalf, ScoreFunction::mult(), {}, chain({FilterFn::constant(1)})));
  r.constant_part.push_back(term(kHalf, ScoreFunction::mult(), chain({FilterFn::constant(1)}), {}));
  return r;
}

LinearReduction reduce_l1_to_min() {
  LinearReduction r;
  r.name = "l1-to-min";
  r.source = ScoreFunction::l1();
  r.lo = -kUnbounded / 4;
  r.hi = kUnbounded / 4;
  r.terms.push_back(term(Rational(-2), ScoreFunction::min(), {}, {}));
  r.constant_part.push_back(term(kOne, ScoreFunction::mult(), {}, chain({FilterFn::constant(1)})));
  r.constant_part.push_back(term(kOne, ScoreFunction::mult(), chain({FilterFn::constant(1)}), {}));
  return r;
}

LinearReduction reduce_weighted_eq_to_ham(const WeightFn& w, Int W, Wide lo, Wide hi) {
  if (W < 0) throw BoundError("weight bound must be nonnegative");
  if (lo <= hi && lo > -kUnbounded && hi < kUnbounded && w.max_over(static_cast<Int>(lo), static_cast<Int>(hi)) > W)
    throw BoundError("weights exceed the declared bound");
  LinearReduction r;
  r.name = "weighted-eq-to-ham";
  r.source = ScoreFunction::weighted_eq(w);
  r.lo = lo;
  r.hi = hi;
  if (W == 0) return r;
  const unsigned bits = floor_log2(static_cast<std::uint64_t>(W)) + 1;
  for (unsigned i = 0; i < bits; ++i) {
    FilterChain f = chain({FilterFn::weight_bit(w, i)});
    r.terms.push_back(term(Rational(Wide{1} << i), ScoreFunction::eq(), f, f));
  }
  return r;
}

LinearReduction reduce_eq_to_ham() {
  LinearReduction r;
  r.name = "eq-to-ham";
  r.source = ScoreFunction::eq();
  r.terms.push_back(term(-kOne, ScoreFunction::ham(), {}, {}));
  r.constant_part.push_back(mult_one(kOne));
  return r;
}

LinearReduction reduce_axis_orthogonal_to_mult(const PiecewisePolynomial& pp) {
  if (!pp.is_axis_orthogonal()) throw ReductionError("piecewise polynomial is not axis-orthogonal");
  LinearReduction r;
  r.name = "axis-orthogonal-to-mult";
  r.source = ScoreFunction::piecewise(pp);
  const ScoreFunction mult = ScoreFunction::mult();
  for (const HalfplaneSummand& s : pp.summands) {
    if (s.A == 0 && s.B == 0 && s.C <= 0) continue;
    FilterChain cx;
    FilterChain cy;
    if (s.B == 0 && s.A != 0) cx = chain({FilterFn::half_line(s.A, s.C)});
    if (s.A == 0 && s.B != 0) cy = chain({FilterFn::half_line(s.B, s.C)});
    for (unsigned a = 0; a <= s.poly.deg_x(); ++a)
      for (unsigned b = 0; b <= s.poly.deg_y(); ++b) {
        const Wide c = s.poly.coef(a, b);
        if (c == 0) continue;
        r.terms.push_back(term(Rational(c), mult, cx.then(FilterFn::power(a)), cy.then(FilterFn::power(b))));
      }
  }
  return r;
}

}  // namespace hamred
