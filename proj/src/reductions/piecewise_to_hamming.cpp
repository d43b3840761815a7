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

#include "internal.hpp"

namespace hamred {

namespace detail {

void append_composed(LinearReduction& outer, const Rational& alpha, const FilterChain& fx, const FilterChain& fy,
                     const LinearReduction& inner) {
  for (const auto& t : inner.terms)
    outer.terms.push_back({alpha * t.alpha, t.target, fx.then(t.f), fy.then(t.g)});
  for (const auto& t : inner.constant_part)
    outer.constant_part.push_back({alpha * t.alpha, t.target, fx.then(t.f), fy.then(t.g)});
}

}  // namespace detail

namespace {

void check_domain(Wide lo, Wide hi) {
  if (lo > hi) throw BoundError("empty reduction domain");
  if (lo < -kUnbounded || hi > kUnbounded || hi - lo >= kUnbounded)
    throw BoundError("reduction domain must be bounded");
}

Int domain_size(Wide lo, Wide hi) { return static_cast<Int>(hi - lo + 1); }

// x^i y^j * P expressed in u = -A x + shift, v = B y + C + shift, scaled by
// A^dx B^dy so every coefficient is an integer.
Poly2 substitute(const Poly2& p, Int A, Int B, Int C, Wide shift) {
  const unsigned dx = p.deg_x();
  const unsigned dy = p.deg_y();
  Poly2 out;
  for (unsigned i = 0; i <= dx; ++i)
    for (unsigned j = 0; j <= dy; ++j) {
      const Wide c = p.coef(i, j);
      if (c == 0) continue;
      const Wide scale = checked_mul(c, checked_mul(checked_pow<Wide>(A, dx - i), checked_pow<Wide>(B, dy - j)));
      // x = (shift - u) / A, y = (v - C - shift) / B
      out = out + Poly2::monomial(scale, i, j).affine(-1, shift, 1, checked_sub<Wide>(-Wide{C}, shift));
    }
  return out;
}

void lower_eq_terms(LinearReduction& r) {
  std::vector<ReductionTerm> kept;
  for (auto& t : r.terms) {
    if (t.target.kind() != ScoreKind::eq) {
      kept.push_back(std::move(t));
      continue;
    }
    const FilterFn one = FilterFn::constant(1);
    r.constant_part.push_back({t.alpha, ScoreFunction::mult(), t.f.then(one), t.g.then(one)});
    kept.push_back({-t.alpha, ScoreFunction::ham(), t.f, t.g});
  }
  r.terms = std::move(kept);
}

}  // namespace

LinearReduction reduce_piecewise_to_ham(const PiecewisePolynomial& pp, Wide lo, Wide hi) {
  check_domain(lo, hi);
  LinearReduction r;
  r.name = "piecewise-to-ham";
  r.source = ScoreFunction::piecewise(pp);
  r.lo = lo;
  r.hi = hi;
  for (const HalfplaneSummand& s : pp.summands) {
    if (s.poly.is_zero()) continue;
    if (s.is_axis_orthogonal()) {
      PiecewisePolynomial single;
      single.summands.push_back(s);
      detail::append_composed(r, Rational(1), {}, {}, reduce_axis_orthogonal_to_mult(single));
      continue;
    }
    const Wide u1 = -Wide{s.A} * lo;
    const Wide u2 = -Wide{s.A} * hi;
    const Wide v1 = Wide{s.B} * lo + s.C;
    const Wide v2 = Wide{s.B} * hi + s.C;
    const Wide shift = -std::min({u1, u2, v1, v2});
    const Wide top = std::max({u1, u2, v1, v2}) + shift;
    if (top >= kUnbounded || shift >= kUnbounded) throw BoundError("substituted domain exceeds the value range");
    const Poly2 p = s.poly.trimmed();
    Poly2 sub = substitute(p, s.A, s.B, s.C, shift);
    Rational alpha = Rational(1) / Rational(checked_mul(checked_pow<Wide>(s.A, p.deg_x()), checked_pow<Wide>(s.B, p.deg_y())));
    const Wide g = sub.content();
    if (g == 0) continue;
    sub = sub.divided(g);
    alpha *= Rational(g);
    FilterChain fx = FilterChain().then(FilterFn::affine(-s.A, static_cast<Int>(shift)));
    FilterChain fy = FilterChain().then(FilterFn::affine(s.B, static_cast<Int>(checked_add<Wide>(s.C, shift))));
    MdomStats stats;
    detail::expand_mdom(sub, alpha, fx, fy, top, &r, stats);
  }
  lower_eq_terms(r);
  simplify(r);
  return r;
}

LinearReduction lower_to_hamming(const ScoreFunction& s, Wide lo, Wide hi) {
  check_domain(lo, hi);
  LinearReduction r;
  switch (s.kind()) {
    case ScoreKind::ham:
    case ScoreKind::mult:
      r = identity_reduction(s);
      break;
    case ScoreKind::eq:
      r = reduce_eq_to_ham();
      break;
    case ScoreKind::dom: {
      const FilterChain shift = FilterChain().then(FilterFn::shift(static_cast<Int>(-lo)));
      r.source = s;
      detail::append_composed(r, Rational(1), shift, shift, reduce_dom_to_ham(domain_size(lo, hi)));
      break;
    }
    case ScoreKind::l1: {
      const FilterChain shift = FilterChain().then(FilterFn::shift(static_cast<Int>(-lo)));
      LinearReduction inner = reduce_l1_to_dom(domain_size(lo, hi));
      r.source = s;
      r.lo = lo;
      r.hi = hi;
      detail::append_composed(r, Rational(1), shift, shift, inner);
      r = lower_terms(r);
      break;
    }
    case ScoreKind::thr:
    case ScoreKind::min: {
      r = s.kind() == ScoreKind::thr ? reduce_thr_to_dom(s.param()) : reduce_min_to_l1();
      r.lo = lo;
      r.hi = hi;
      r = lower_terms(r);
      break;
    }
    case ScoreKind::weighted_eq: {
      const Wide W = s.weight().max_over(static_cast<Int>(lo), static_cast<Int>(hi));
      r = reduce_weighted_eq_to_ham(s.weight(), narrow(W), lo, hi);
      r = lower_terms(r);
      break;
    }
    case ScoreKind::l2p:
      r = reduce_axis_orthogonal_to_mult(s.expansion());
      break;
    case ScoreKind::l2p1:
    case ScoreKind::max:
      r = reduce_piecewise_to_ham(s.expansion(), lo, hi);
      break;
    case ScoreKind::piecewise:
      r = s.pp().is_axis_orthogonal() ? reduce_axis_orthogonal_to_mult(s.pp()) : reduce_piecewise_to_ham(s.pp(), lo, hi);
      break;
  }
  r.source = s;
  r.lo = lo;
  r.hi = hi;
  r.name = "lowered-" + s.tag().substr(0, s.tag().find(':'));
  r.preserves_star = filters_preserve_star(r);
  simplify(r);
  return r;
}

LinearReduction lower_terms(const LinearReduction& r) {
  LinearReduction out;
  out.name = r.name;
  out.source = r.source;
  out.lo = r.lo;
  out.hi = r.hi;
  const ValueRange domain{r.lo, r.hi, true};
  auto lower_one = [&](const ReductionTerm& t, bool constant) {
    const ScoreKind k = t.target.kind();
    if (k == ScoreKind::ham || k == ScoreKind::mult) {
      (constant ? out.constant_part : out.terms).push_back(t);
      return;
    }
    const ValueRange rf = t.f.image(domain);
    const ValueRange rg = t.g.image(domain);
    if (rf.empty() || rg.empty()) return;  // every pair involves ★
    const Wide lo = std::min(rf.lo, rg.lo);
    const Wide hi = std::max(rf.hi, rg.hi);
    detail::append_composed(out, t.alpha, t.f, t.g, lower_to_hamming(t.target, lo, hi));
  };
  for (const auto& t : r.constant_part) lower_one(t, true);
  for (const auto& t : r.terms) lower_one(t, false);
  out.preserves_star = r.preserves_star && filters_preserve_star(out);
  simplify(out);
  return out;
}

}  // namespace hamred
