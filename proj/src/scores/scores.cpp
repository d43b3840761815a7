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

#include "hamred/scores.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace hamred {

unsigned PiecewisePolynomial::degree() const {
  unsigned d = 0;
  for (const auto& s : summands) d = std::max(d, s.poly.total_degree());
  return d;
}

bool PiecewisePolynomial::is_axis_orthogonal() const {
  return std::all_of(summands.begin(), summands.end(), [](const auto& s) { return s.is_axis_orthogonal(); });
}

Wide PiecewisePolynomial::max_magnitude() const {
  Wide m = 0;
  for (const auto& s : summands) {
    m = std::max({m, wide_abs(s.A), wide_abs(s.B), wide_abs(s.C)});
    for (unsigned a = 0; a <= s.poly.deg_x(); ++a)
      for (unsigned b = 0; b <= s.poly.deg_y(); ++b) m = std::max(m, wide_abs(s.poly.coef(a, b)));
  }
  return m;
}

Wide eval_piecewise(const PiecewisePolynomial& pp, Wide x, Wide y) {
  Wide acc = 0;
  for (const auto& s : pp.summands) {
    Wide cond = checked_add(checked_add(checked_mul<Wide>(s.A, x), checked_mul<Wide>(s.B, y)), Wide{s.C});
    if (cond > 0) acc = checked_add(acc, s.poly.eval(x, y));
  }
  return acc;
}

ScoreFunction ScoreFunction::thr(Int delta) {
  if (delta <= 0) throw BoundError("threshold must be positive");
  ScoreFunction f(ScoreKind::thr);
  f.param_ = delta;
  return f;
}

ScoreFunction ScoreFunction::l2p(Int p) {
  if (p < 0) throw BoundError("power parameter must be nonnegative");
  ScoreFunction f(ScoreKind::l2p);
  f.param_ = p;
  return f;
}

ScoreFunction ScoreFunction::l2p1(Int p) {
  if (p < 0) throw BoundError("power parameter must be nonnegative");
  if (p == 0) return l1();
  ScoreFunction f(ScoreKind::l2p1);
  f.param_ = p;
  return f;
}

ScoreFunction ScoreFunction::weighted_eq(WeightFn w) {
  ScoreFunction f(ScoreKind::weighted_eq);
  f.weight_ = std::make_shared<const WeightFn>(std::move(w));
  return f;
}

ScoreFunction ScoreFunction::piecewise(PiecewisePolynomial pp) {
  ScoreFunction f(ScoreKind::piecewise);
  f.pp_ = std::make_shared<const PiecewisePolynomial>(std::move(pp));
  return f;
}

Wide ScoreFunction::eval_int(Int x, Int y) const {
  const Wide wx = x;
  const Wide wy = y;
  switch (kind_) {
    case ScoreKind::ham: return x != y;
    case ScoreKind::dom: return x <= y;
    case ScoreKind::thr: return wide_abs(wx - wy) >= param_;
    case ScoreKind::l1: return wide_abs(wx - wy);
    case ScoreKind::l2p: return checked_pow(wx - wy, static_cast<unsigned>(2 * param_));
    case ScoreKind::l2p1: return checked_pow(wide_abs(wx - wy), static_cast<unsigned>(2 * param_ + 1));
    case ScoreKind::min: return std::min(x, y);
    case ScoreKind::max: return std::max(x, y);
    case ScoreKind::eq: return x == y;
    case ScoreKind::mult: return wx * wy;
    case ScoreKind::weighted_eq: return x == y ? (*weight_)(x) : 0;
    case ScoreKind::piecewise: return eval_piecewise(*pp_, wx, wy);
  }
  return 0;
}

Wide eval_score(const ScoreFunction& f, ExtInt x, ExtInt y) { return f(x, y); }

bool ScoreFunction::is_shift_invariant() const noexcept {
  switch (kind_) {
    case ScoreKind::ham:
    case ScoreKind::dom:
    case ScoreKind::thr:
    case ScoreKind::l1:
    case ScoreKind::l2p:
    case ScoreKind::l2p1:
    case ScoreKind::eq:
      return true;
    default:
      return false;
  }
}

namespace {

// (sx * x + sy * y)^k
Poly2 linear_power(Wide sx, Wide sy, unsigned k) {
  Poly2 p(k, k);
  for (unsigned i = 0; i <= k; ++i)
    p.set(i, k - i, checked_mul(binomial(k, i), checked_mul(checked_pow(sx, i), checked_pow(sy, k - i))));
  return p.trimmed();
}

HalfplaneSummand summand(Poly2 p, Int A, Int B, Int C) { return HalfplaneSummand{std::move(p), A, B, C}; }

}  // namespace

PiecewisePolynomial ScoreFunction::expansion() const {
  PiecewisePolynomial pp;
  auto& s = pp.summands;
  const Poly2 one = Poly2::constant(1);
  const Poly2 x = Poly2::monomial(1, 1, 0);
  const Poly2 y = Poly2::monomial(1, 0, 1);
  switch (kind_) {
    case ScoreKind::ham:
      s = {summand(one, 1, -1, 0), summand(one, -1, 1, 0)};
      break;
    case ScoreKind::dom:
      s = {summand(one, -1, 1, 1)};
      break;
    case ScoreKind::thr:
      s = {summand(one, 1, -1, 1 - param_), summand(one, -1, 1, 1 - param_)};
      break;
    case ScoreKind::l1:
    case ScoreKind::l2p1: {
      const unsigned k = kind_ == ScoreKind::l1 ? 1u : static_cast<unsigned>(2 * param_ + 1);
      s = {summand(linear_power(1, -1, k), 1, -1, 0), summand(linear_power(-1, 1, k), -1, 1, 0)};
      break;
    }
    case ScoreKind::l2p:
      s = {summand(linear_power(1, -1, static_cast<unsigned>(2 * param_)), 0, 0, 1)};
      break;
    case ScoreKind::min:
      s = {summand(x, -1, 1, 1), summand(y, 1, -1, 0)};
      break;
    case ScoreKind::max:
      s = {summand(x, 1, -1, 1), summand(y, -1, 1, 0)};
      break;
    case ScoreKind::eq:
      s = {summand(one, 0, 0, 1), summand(one.scaled(-1), 1, -1, 0), summand(one.scaled(-1), -1, 1, 0)};
      break;
    case ScoreKind::mult:
      s = {summand(Poly2::monomial(1, 1, 1), 0, 0, 1)};
      break;
    case ScoreKind::weighted_eq:
      throw ReductionError("weighted equality has no piecewise polynomial expansion");
    case ScoreKind::piecewise:
      return *pp_;
  }
  return pp;
}

std::string ScoreFunction::tag() const {
  switch (kind_) {
    case ScoreKind::ham: return "ham";
    case ScoreKind::dom: return "dom";
    case ScoreKind::thr: return "thr:" + std::to_string(param_);
    case ScoreKind::l1: return "l1";
    case ScoreKind::l2p: return "l2p:" + std::to_string(param_);
    case ScoreKind::l2p1: return "l2p1:" + std::to_string(param_);
    case ScoreKind::min: return "min";
    case ScoreKind::max: return "max";
    case ScoreKind::eq: return "eq";
    case ScoreKind::mult: return "mult";
    case ScoreKind::weighted_eq: return "weq:" + weight_->tag();
    case ScoreKind::piecewise: {
      std::string out = "pw:";
      for (std::size_t i = 0; i < pp_->summands.size(); ++i) {
        const auto& s = pp_->summands[i];
        if (i) out += ";";
        out += std::to_string(s.A) + "/" + std::to_string(s.B) + "/" + std::to_string(s.C) + ":" + s.poly.to_string();
      }
      return out;
    }
  }
  return "ham";
}

namespace {

PiecewisePolynomial parse_pp(const std::string& body) {
  PiecewisePolynomial pp;
  if (body.empty()) return pp;
  for (const std::string& part : detail::split(body, ';')) {
    auto [cond, poly] = detail::split_once(part, ':');
    auto abc = detail::split(cond, '/');
    if (abc.size() != 3) throw ParseError("piecewise summand needs A/B/C, got '" + cond + "'");
    Poly2 p;
    for (const std::string& mono : detail::split(poly, '+')) {
      auto fields = detail::split(mono, '*');
      if (fields.size() != 3) throw ParseError("monomial must be coef*a*b, got '" + mono + "'");
      p.add_to(static_cast<unsigned>(detail::parse_int(fields[1])), static_cast<unsigned>(detail::parse_int(fields[2])),
               detail::parse_wide(fields[0]));
    }
    pp.summands.push_back(
        {p.trimmed(), detail::parse_int(abc[0]), detail::parse_int(abc[1]), detail::parse_int(abc[2])});
  }
  return pp;
}

}  // namespace

ScoreFunction ScoreFunction::parse(const std::string& tag) {
  auto [name, rest] = detail::split_once(tag, ':');
  if (name == "ham") return ham();
  if (name == "dom" || name == "lessthan") return dom();
  if (name == "l1") return l1();
  if (name == "min") return min();
  if (name == "max") return max();
  if (name == "eq") return eq();
  if (name == "mult") return mult();
  if (name == "thr") return thr(detail::parse_int(rest));
  if (name == "l2p") return l2p(detail::parse_int(rest));
  if (name == "l2p1") return l2p1(detail::parse_int(rest));
  if (name == "weq") return weighted_eq(WeightFn::parse(rest));
  if (name == "pw") return piecewise(parse_pp(rest));
  // Short forms: thr5, l2, l3, ...
  if (name.size() > 3 && name.compare(0, 3, "thr") == 0) return thr(detail::parse_int(name.substr(3)));
  if (name.size() > 1 && name[0] == 'l') {
    Int k = detail::parse_int(name.substr(1));
    if (k <= 0) throw ParseError("unknown score '" + tag + "'");
    if (k == 1) return l1();
    return k % 2 == 0 ? l2p(k / 2) : l2p1((k - 1) / 2);
  }
  throw ParseError("unknown score '" + tag + "'");
}

}  // namespace hamred
