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

#include "internal.hpp"

namespace hamred {

namespace {

enum class Parity { any, odd_even, even_odd, odd_odd };

struct Node {
  FilterChain fx;
  FilterChain fy;
  Parity state = Parity::any;
  Poly2 poly;
};

struct Weighted {
  FilterChain fx;
  FilterChain fy;
  Poly1 weight;
};

using NodeMap = std::map<std::string, Node>;

std::string key_of(const FilterChain& fx, const FilterChain& fy) { return fx.tag() + "|" + fy.tag(); }

void accumulate(NodeMap& m, FilterChain fx, FilterChain fy, Parity state, const Poly2& p) {
  if (p.is_zero()) return;
  std::string key = key_of(fx, fy);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(std::move(key), Node{std::move(fx), std::move(fy), state, p});
  } else {
    it->second.poly = it->second.poly + p;
  }
}

void accumulate_weight(std::map<std::string, Weighted>& m, const FilterChain& fx, const FilterChain& fy,
                       const Poly1& w) {
  std::string key = key_of(fx, fy);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(std::move(key), Weighted{fx, fy, w});
    return;
  }
  Poly1& acc = it->second.weight;
  if (acc.size() < w.size()) acc.resize(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) acc[i] = checked_add(acc[i], w[i]);
}

// P(x - dx, y - dy)
Poly2 shifted(const Poly2& p, Wide dx, Wide dy) { return p.affine(1, -dx, 1, -dy); }

constexpr Wide kExactScan = 4096;

// Largest value of max(sign * p(t), 0) over t in [0, R].
Wide weight_max(const Poly1& p, Wide R, int sign) {
  if (R <= kExactScan) {
    Wide best = 0;
    for (Wide t = 0; t <= R; ++t) best = std::max(best, sign * eval_poly1(p, t));
    return best;
  }
  bool all_nonneg = true;
  bool all_nonpos = true;
  Wide bound = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    all_nonneg = all_nonneg && p[k] >= 0;
    all_nonpos = all_nonpos && p[k] <= 0;
    bound = checked_add(bound, checked_mul(wide_abs(p[k]), checked_pow(R, static_cast<unsigned>(k))));
  }
  if ((sign > 0 && all_nonpos) || (sign < 0 && all_nonneg)) return 0;
  return bound;
}

unsigned bit_count(Wide W) {
  if (W <= 0) return 0;
  unsigned bits = 0;
  while (W > 0) {
    ++bits;
    W >>= 1;
  }
  return bits;
}

}  // namespace

namespace detail {

void expand_mdom(const Poly2& P, const Rational& alpha, const FilterChain& fx, const FilterChain& fy, Wide max_value,
                 LinearReduction* out, MdomStats& stats) {
  if (P.is_zero() || max_value <= 0) return;
  const FilterFn even = FilterFn::even();
  const FilterFn odd = FilterFn::odd();
  const FilterFn halve = FilterFn::halve();

  NodeMap current;
  accumulate(current, fx, fy, Parity::any, P);
  for (unsigned level = 0; !current.empty(); ++level) {
    const Wide R = max_value >> level;
    if (R == 0) break;  // both sides are 0, so 1[u < v] vanishes
    NodeMap restricted;
    NodeMap next;
    std::map<std::string, Weighted> meq;

    for (auto& [key, node] : current) {
      ++stats.nodes;
      const Poly2& p = node.poly;
      accumulate(next, node.fx.then(halve), node.fy.then(halve), Parity::any, p.affine(2, 0, 2, 0));
      accumulate_weight(meq, node.fx.then(even), node.fy.then(odd).then(FilterFn::shift(-1)), p.diagonal());
      accumulate(restricted, node.fx.then(odd), node.fy.then(even), Parity::odd_even, p - shifted(p, 1, 0));
      accumulate(restricted, node.fx.then(even), node.fy.then(odd), Parity::even_odd, p - shifted(p, 0, 1));
      accumulate(restricted, node.fx.then(odd), node.fy.then(odd), Parity::odd_odd, p - shifted(p, 1, 1));
    }
    for (auto& [key, node] : restricted) {
      ++stats.nodes;
      Poly2 p = node.poly;
      const FilterChain child_x = node.fx.then(halve);
      const FilterChain child_y = node.fy.then(halve);
      while (!p.is_zero()) {
        accumulate(next, child_x, child_y, Parity::any, p.affine(2, 0, 2, 0));
        Poly2 lower;
        switch (node.state) {
          case Parity::odd_even:
            lower = shifted(p, 1, 0);
            break;
          case Parity::even_odd:
            accumulate_weight(meq, node.fx.then(even), node.fy.then(odd).then(FilterFn::shift(-1)), p.diagonal());
            lower = shifted(p, 0, 1);
            break;
          default:
            lower = shifted(p, 1, 1);
            break;
        }
        p = p - lower;
      }
    }

    for (auto& [key, wt] : meq) {
      const bool zero = std::all_of(wt.weight.begin(), wt.weight.end(), [](Wide c) { return c == 0; });
      if (zero) continue;
      for (int sign : {1, -1}) {
        const unsigned bits = bit_count(weight_max(wt.weight, R, sign));
        stats.eq_terms += bits;
        if (!out || bits == 0) continue;
        const WeightFn w = sign > 0 ? WeightFn::positive_part(wt.weight) : WeightFn::negative_part(wt.weight);
        for (unsigned i = 0; i < bits; ++i) {
          const FilterFn bit = FilterFn::weight_bit(w, i);
          Rational a = alpha * Rational(Wide{sign} * (Wide{1} << i));
          out->terms.push_back({a, ScoreFunction::eq(), wt.fx.then(bit), wt.fy.then(bit)});
        }
      }
    }
    current = std::move(next);
  }
}

}  // namespace detail

LinearReduction reduce_mdom_to_ham(unsigned a, unsigned b, Int M, MdomStats* stats) {
  if (M <= 0) throw BoundError("reduction bound must be positive");
  LinearReduction r;
  r.name = "mdom-to-ham";
  PiecewisePolynomial pp;
  pp.summands.push_back({Poly2::monomial(1, a, b), -1, 1, 0});
  r.source = ScoreFunction::piecewise(pp);
  r.lo = 0;
  r.hi = M - 1;
  MdomStats local;
  detail::expand_mdom(Poly2::monomial(1, a, b), Rational(1), {}, {}, M - 1, &r, local);
  const Wide bound = mdom_term_bound(a, b, ceil_log2(static_cast<std::uint64_t>(M)));
  if (static_cast<Wide>(local.eq_terms) > bound) throw ReductionError("monomial dominance exceeded its term bound");
  if (stats) *stats = local;
  return r;
}

MdomStats count_mdom_terms(unsigned a, unsigned b, Int M) {
  if (M <= 0) throw BoundError("reduction bound must be positive");
  MdomStats stats;
  detail::expand_mdom(Poly2::monomial(1, a, b), Rational(1), {}, {}, M - 1, nullptr, stats);
  return stats;
}

Wide mdom_term_bound(unsigned a, unsigned b, unsigned m) {
  const unsigned s = a + b;
  const Wide multinomial = factorial(s + m) / (factorial(a) * factorial(b) * factorial(m));
  return Wide{kMdomBoundConstant} * m * std::max(s, 1u) * multinomial * (Wide{1} << (2 * s));
}

}  // namespace hamred
