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
#include <optional>

#include "internal.hpp"

namespace hamred {

namespace {

// Π_{r < i} (t - t0 - r)
Poly1 falling(Wide t0, unsigned i) {
  Poly1 p{1};
  for (unsigned r = 0; r < i; ++r) {
    Poly1 next(p.size() + 1, 0);
    const Wide root = t0 + r;
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] = checked_add(next[k + 1], p[k]);
      next[k] = checked_sub(next[k], checked_mul(p[k], root));
    }
    p = std::move(next);
  }
  return p;
}

// The polynomial of degree <= d per variable through F on
// [x0, x0 + d] x [y0, y0 + d], via Newton forward differences.
template <typename F>
Poly2 interpolate(const F& f, Wide x0, Wide y0, unsigned d) {
  const unsigned n = d + 1;
  std::vector<Wide> diff(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) diff[i * n + j] = f(x0 + i, y0 + j);
  for (unsigned i = 0; i < n; ++i)  // differences along y
    for (unsigned k = 1; k < n; ++k)
      for (unsigned j = n - 1; j >= k; --j) diff[i * n + j] = checked_sub(diff[i * n + j], diff[i * n + j - 1]);
  for (unsigned j = 0; j < n; ++j)  // along x
    for (unsigned k = 1; k < n; ++k)
      for (unsigned i = n - 1; i >= k; --i) diff[i * n + j] = checked_sub(diff[i * n + j], diff[(i - 1) * n + j]);

  const Wide df = factorial(d);
  Poly2 scaled(d, d);
  for (unsigned i = 0; i < n; ++i) {
    const Poly1 fx = falling(x0, i);
    for (unsigned j = 0; j < n; ++j) {
      const Wide c = diff[i * n + j];
      if (c == 0) continue;
      const Poly1 fy = falling(y0, j);
      const Wide w = checked_mul(c, checked_mul(df / factorial(i), df / factorial(j)));
      for (std::size_t a = 0; a < fx.size(); ++a)
        for (std::size_t b = 0; b < fy.size(); ++b)
          scaled.add_to(static_cast<unsigned>(a), static_cast<unsigned>(b), checked_mul(w, checked_mul(fx[a], fy[b])));
    }
  }
  return scaled.divided(checked_mul(df, df)).trimmed();
}

// Maximal support element of h (nothing else dominates it coordinatewise),
// smallest a + b first, then smallest a.
bool pick_exponents(const Poly2& h, unsigned& a, unsigned& b) {
  bool found = false;
  for (unsigned s = 0; s <= h.deg_x() + h.deg_y() && !found; ++s)
    for (unsigned i = 0; i <= std::min(s, h.deg_x()) && !found; ++i) {
      const unsigned j = s - i;
      if (j > h.deg_y() || h.coef(i, j) == 0) continue;
      bool maximal = true;
      for (unsigned p = i; p <= h.deg_x() && maximal; ++p)
        for (unsigned q = j; q <= h.deg_y(); ++q)
          if ((p != i || q != j) && h.coef(p, q) != 0) {
            maximal = false;
            break;
          }
      if (maximal) {
        a = i;
        b = j;
        found = true;
      }
    }
  return found;
}

// The grid value is Q_>(x, y) + r(x) 1[x = y] with deg r = e, so
// Eq(x, y) = (1/c) Σ_j (-1)^(e-j) C(e, j) (F - Q_>)(x + j, y + j).
// Ham = 1 - Eq, and Dom is built on Ham through the bit decomposition.
HamToPiecewisePlan diagonal_plan(const PiecewisePolynomial& pp, HamToPiecewisePlan plan, Int M) {
  const GridParams& g = plan.grid;
  const unsigned e = plan.a;
  const ScoreFunction target = ScoreFunction::piecewise(pp);

  // Valid on [0, M + 1], the range dom-to-ham feeds its Ham terms.
  LinearReduction ham;
  ham.source = ScoreFunction::ham();
  ham.constant_part.push_back({Rational(1), ScoreFunction::mult(), FilterChain().then(FilterFn::constant(1)),
                               FilterChain().then(FilterFn::constant(1))});
  Poly2 mult_part;
  for (unsigned j = 0; j <= e; ++j) {
    Wide coeff = binomial(e, j);
    if ((e - j) % 2 == 1) coeff = -coeff;
    const FilterChain f = FilterChain().then(FilterFn::affine(narrow(g.alpha), narrow(g.alpha * j + g.gamma)));
    const FilterChain gy = FilterChain().then(FilterFn::affine(narrow(g.beta), narrow(g.beta * j + g.delta)));
    ham.terms.push_back({Rational(-coeff, plan.c), target, f, gy});
    mult_part = mult_part + plan.q_gt.affine(1, j, 1, j).scaled(coeff);
  }
  for (unsigned i = 0; i <= mult_part.deg_x(); ++i)
    for (unsigned j = 0; j <= mult_part.deg_y(); ++j) {
      const Wide c = mult_part.coef(i, j);
      if (c == 0) continue;
      ham.constant_part.push_back({Rational(c, plan.c), ScoreFunction::mult(), FilterChain().then(FilterFn::power(i)),
                                   FilterChain().then(FilterFn::power(j))});
    }

  plan.ham_plan = ham;
  plan.ham_plan.name = "ham-via-piecewise";
  plan.ham_plan.lo = 0;
  plan.ham_plan.hi = M - 1;

  LinearReduction& dom = plan.dom_plan;
  dom.name = "dom-via-piecewise";
  dom.source = ScoreFunction::dom();
  dom.lo = 0;
  dom.hi = M;
  const LinearReduction outer = reduce_dom_to_ham(M + 1);
  for (const auto* part : {&outer.terms, &outer.constant_part})
    for (const auto& t : *part) {
      if (t.target.kind() == ScoreKind::ham)
        detail::append_composed(dom, t.alpha, t.f, t.g, ham);
      else
        dom.constant_part.push_back(t);
    }
  return plan;
}

}  // namespace

HamToPiecewisePlan reduce_ham_to_piecewise(const PiecewisePolynomial& pp, Int M) {
  if (M <= 0) throw BoundError("reduction bound must be positive");
  if (pp.is_axis_orthogonal()) throw ReductionError("Hamming does not reduce to an axis-orthogonal score");

  HamToPiecewisePlan plan;
  const unsigned d = pp.degree();
  plan.spacing = 2 * static_cast<Int>(d) + 2;
  plan.offset = static_cast<Int>(d) + 1;
  plan.N = std::max<Wide>(Wide{plan.spacing} * M + plan.offset + d, 3 * Wide{d} + 2);

  std::vector<Line> lines;
  for (const auto& s : pp.summands) lines.push_back({s.A, s.B, s.C});

  std::vector<std::size_t> rejected;
  std::optional<HamToPiecewisePlan> fallback;
  while (true) {
    GridParams g;
    try {
      g = lines_lemma_select(lines, plan.N, rejected);
    } catch (const ReductionError&) {
      if (!fallback) throw;
      return diagonal_plan(pp, *fallback, M);
    }
    auto F = [&](Wide x, Wide y) { return eval_piecewise(pp, g.alpha * x + g.gamma, g.beta * y + g.delta); };
    const Wide far = 2 * Wide{d} + 2;
    Poly2 q_gt = interpolate(F, far, 0, d);
    Poly2 q_lt = interpolate(F, 0, far, d);
    // Spot check away from the interpolation windows.
    if (q_gt.eval(plan.N, 0) != F(plan.N, 0) || q_lt.eval(0, plan.N) != F(0, plan.N) ||
        q_gt.eval(plan.N, plan.N - d - 2) != F(plan.N, plan.N - d - 2))
      throw ReductionError("grid regions are not polynomial");
    Poly2 h = q_lt - q_gt;
    unsigned a = 0;
    unsigned b = 0;
    if (h.is_zero() || !pick_exponents(h, a, b)) {
      if (!fallback && h.is_zero()) {
        // Q_= - Q_> along the diagonal; its top forward difference is c.
        std::vector<Wide> diff(d + 1);
        for (unsigned k = 0; k <= d; ++k) diff[k] = checked_sub(F(k, k), q_gt.eval(k, k));
        for (unsigned k = 1; k <= d; ++k)
          for (unsigned j = d; j >= k; --j) diff[j] = checked_sub(diff[j], diff[j - 1]);
        for (unsigned k = d + 1; k-- > 0;)
          if (diff[k] != 0) {
            fallback = plan;
            fallback->grid = g;
            fallback->q_gt = q_gt;
            fallback->q_lt = q_lt;
            fallback->a = k;
            fallback->c = diff[k];
            fallback->diagonal = true;
            break;
          }
      }
      rejected.push_back(g.index);
      continue;
    }
    plan.grid = g;
    plan.q_gt = q_gt;
    plan.q_lt = q_lt;
    plan.a = a;
    plan.b = b;
    plan.c = checked_mul(checked_mul(factorial(a), factorial(b)), h.coef(a, b));
    break;
  }

  // Dom(x, y) = G(s x, s y + t) with
  // G = (1/c) D_x^a D_y^b (F - Q_>).
  LinearReduction& dom = plan.dom_plan;
  dom.name = "dom-via-piecewise";
  dom.source = ScoreFunction::dom();
  dom.lo = 0;
  dom.hi = M;
  const ScoreFunction target = ScoreFunction::piecewise(pp);
  const Wide s = plan.spacing;
  const Wide t = plan.offset;
  const GridParams& g = plan.grid;
  Poly2 mult_part;
  for (unsigned sx = 0; sx <= plan.a; ++sx)
    for (unsigned ty = 0; ty <= plan.b; ++ty) {
      Wide coeff = checked_mul(binomial(plan.a, sx), binomial(plan.b, ty));
      if ((plan.a - sx + plan.b - ty) % 2 == 1) coeff = -coeff;
      const FilterChain f = FilterChain().then(FilterFn::affine(narrow(g.alpha * s), narrow(g.alpha * sx + g.gamma)));
      const FilterChain gy =
          FilterChain().then(FilterFn::affine(narrow(g.beta * s), narrow(g.beta * (t + ty) + g.delta)));
      dom.terms.push_back({Rational(coeff, plan.c), target, f, gy});
      mult_part = mult_part + plan.q_gt.affine(s, sx, s, t + ty).scaled(coeff);
    }
  for (unsigned i = 0; i <= mult_part.deg_x(); ++i)
    for (unsigned j = 0; j <= mult_part.deg_y(); ++j) {
      const Wide c = mult_part.coef(i, j);
      if (c == 0) continue;
      dom.constant_part.push_back({Rational(-c, plan.c), ScoreFunction::mult(),
                                   FilterChain().then(FilterFn::power(i)), FilterChain().then(FilterFn::power(j))});
    }

  // Ham(x, y) = Dom(x + 1, y) + Dom(M - x, M - 1 - y) on [0, M - 1].
  LinearReduction& ham = plan.ham_plan;
  ham.name = "ham-via-piecewise";
  ham.source = ScoreFunction::ham();
  ham.lo = 0;
  ham.hi = M - 1;
  detail::append_composed(ham, Rational(1), FilterChain().then(FilterFn::shift(1)), {}, dom);
  detail::append_composed(ham, Rational(1), FilterChain().then(FilterFn::affine(-1, M)),
                          FilterChain().then(FilterFn::affine(-1, M - 1)), dom);
  return plan;
}

}  // namespace hamred
