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

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamred/ext_int.hpp"
#include "hamred/polynomial.hpp"

namespace hamred {

// ---------------------------------------------------------------------------
// Piecewise polynomials

/// P(x, y) * 1[A x + B y + C > 0].
struct HalfplaneSummand {
  Poly2 poly;
  Int A = 0;
  Int B = 0;
  Int C = 0;

  bool is_axis_orthogonal() const noexcept { return A == 0 || B == 0; }
  friend bool operator==(const HalfplaneSummand&, const HalfplaneSummand&) = default;
};

struct PiecewisePolynomial {
  std::vector<HalfplaneSummand> summands;

  unsigned degree() const;
  bool is_axis_orthogonal() const;
  /// Largest |coefficient| or |A|, |B|, |C| across summands.
  Wide max_magnitude() const;

  friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;
};

/// Sum over summands, exact.
Wide eval_piecewise(const PiecewisePolynomial& pp, Wide x, Wide y);

// ---------------------------------------------------------------------------
// Weight maps for weighted equality and bit filters

/// Total map from integers to nonnegative integers.
class WeightFn {
 public:
  enum class Kind { table, poly_pos, poly_neg };

  /// w(x) = entries[x] when present, fallback otherwise.
  static WeightFn table(std::map<Int, Int> entries, Int fallback);
  /// w(x) = max(p(x), 0).
  static WeightFn positive_part(Poly1 p);
  /// w(x) = max(-p(x), 0).
  static WeightFn negative_part(Poly1 p);
  static WeightFn identity() { return positive_part({0, 1}); }

  Kind kind() const noexcept { return kind_; }
  Wide operator()(Int x) const;
  /// Upper bound of w over integers in [lo, hi].
  Wide max_over(Int lo, Int hi) const;

  std::string tag() const;
  static WeightFn parse(const std::string& tag);

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  Kind kind_ = Kind::table;
  std::map<Int, Int> entries_;
  Int fallback_ = 0;
  Poly1 poly_;
};

// ---------------------------------------------------------------------------
// Score functions

enum class ScoreKind { ham, dom, thr, l1, l2p, l2p1, min, max, eq, mult, weighted_eq, piecewise };

/// A binary score x ⋄ y from the closed catalog, or an explicit piecewise
/// polynomial. Evaluates to 0 whenever one argument is ★.
class ScoreFunction {
 public:
  ScoreFunction() = default;

  static ScoreFunction ham() { return ScoreFunction(ScoreKind::ham); }
  static ScoreFunction dom() { return ScoreFunction(ScoreKind::dom); }
  /// 1[|x - y| >= delta].
  static ScoreFunction thr(Int delta);
  static ScoreFunction l1() { return ScoreFunction(ScoreKind::l1); }
  /// (x - y)^(2p).
  static ScoreFunction l2p(Int p);
  /// |x - y|^(2p+1).
  static ScoreFunction l2p1(Int p);
  static ScoreFunction min() { return ScoreFunction(ScoreKind::min); }
  static ScoreFunction max() { return ScoreFunction(ScoreKind::max); }
  static ScoreFunction eq() { return ScoreFunction(ScoreKind::eq); }
  static ScoreFunction mult() { return ScoreFunction(ScoreKind::mult); }
  static ScoreFunction weighted_eq(WeightFn w);
  static ScoreFunction piecewise(PiecewisePolynomial pp);

  ScoreKind kind() const noexcept { return kind_; }
  Int param() const noexcept { return param_; }
  const WeightFn& weight() const { return *weight_; }
  const PiecewisePolynomial& pp() const { return *pp_; }

  /// Exact x ⋄ y on integers.
  Wide eval_int(Int x, Int y) const;
  Wide operator()(ExtInt x, ExtInt y) const {
    if (x.is_star() || y.is_star()) return 0;
    return eval_int(x.value(), y.value());
  }

  /// f(x + Δ, y + Δ) = f(x, y) for every Δ.
  bool is_shift_invariant() const noexcept;

  /// Canonical halfplane expansion. WeightedEq has none and throws.
  PiecewisePolynomial expansion() const;

  std::string tag() const;
  static ScoreFunction parse(const std::string& tag);

  friend bool operator==(const ScoreFunction& a, const ScoreFunction& b) { return a.tag() == b.tag(); }

 private:
  explicit ScoreFunction(ScoreKind k) : kind_(k) {}

  ScoreKind kind_ = ScoreKind::ham;
  Int param_ = 0;
  std::shared_ptr<const WeightFn> weight_;
  std::shared_ptr<const PiecewisePolynomial> pp_;
};

Wide eval_score(const ScoreFunction& f, ExtInt x, ExtInt y);

// ---------------------------------------------------------------------------
// Filters

enum class FilterKind {
  identity,
  even,            // x if x even, else ★
  odd,             // x if x odd, else ★
  weight_bit,      // x if bit i of w(x) is set, else ★
  shift_right,     // floor(x / 2^k)
  shift,           // x + k
  negate,          // -x
  power,           // x^k
  affine,          // a x + b
  constant,        // c for every integer
  half_line,       // x if a x + b > 0, else ★
  star_zero_succ,  // ★ -> 0, x -> x + 1
  star_indicator,  // ★ -> 0, x -> 1
  table,           // explicit map with a fallback
};

/// A single-argument map on ℤ ∪ {★}. Every kind except star_zero_succ and
/// star_indicator sends ★ to ★.
class FilterFn {
 public:
  FilterFn() = default;

  static FilterFn identity() { return FilterFn(FilterKind::identity); }
  static FilterFn even() { return FilterFn(FilterKind::even); }
  static FilterFn odd() { return FilterFn(FilterKind::odd); }
  static FilterFn weight_bit(WeightFn w, unsigned bit);
  static FilterFn shift_right(unsigned k);
  static FilterFn halve() { return shift_right(1); }
  static FilterFn shift(Int delta);
  static FilterFn negate() { return FilterFn(FilterKind::negate); }
  static FilterFn power(unsigned k);
  static FilterFn affine(Int a, Int b);
  static FilterFn constant(Int c);
  static FilterFn half_line(Int a, Int b);
  static FilterFn star_zero_succ() { return FilterFn(FilterKind::star_zero_succ); }
  static FilterFn star_indicator() { return FilterFn(FilterKind::star_indicator); }
  static FilterFn table(std::map<Int, ExtInt> entries, ExtInt fallback);

  FilterKind kind() const noexcept { return kind_; }
  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }

  ExtInt operator()(ExtInt x) const;
  bool preserves_star() const noexcept {
    return kind_ != FilterKind::star_zero_succ && kind_ != FilterKind::star_indicator;
  }

  std::string tag() const;
  static FilterFn parse(const std::string& tag);

  friend bool operator==(const FilterFn& a, const FilterFn& b) { return a.tag() == b.tag(); }

 private:
  friend class FilterChain;
  explicit FilterFn(FilterKind k) : kind_(k) {}

  FilterKind kind_ = FilterKind::identity;
  Int a_ = 0;
  Int b_ = 0;
  std::shared_ptr<const WeightFn> weight_;
  std::shared_ptr<const std::map<Int, ExtInt>> table_;
  ExtInt table_fallback_ = kStar;
};

/// Closed integer interval of possible non-★ values; empty when lo > hi.
struct ValueRange {
  Wide lo = 0;
  Wide hi = -1;
  bool empty() const noexcept { return lo > hi; }
  /// The image may contain ★ even when the source had none.
  bool may_add_star = false;
};

/// Filters applied left to right.
class FilterChain {
 public:
  FilterChain() = default;
  FilterChain(std::initializer_list<FilterFn> fs) : fns_(fs) {}
  explicit FilterChain(std::vector<FilterFn> fs) : fns_(std::move(fs)) {}

  const std::vector<FilterFn>& fns() const noexcept { return fns_; }
  bool is_identity() const noexcept { return fns_.empty(); }

  /// This chain followed by `next`, with adjacent filters folded.
  FilterChain then(const FilterFn& next) const;
  FilterChain then(const FilterChain& next) const;

  ExtInt operator()(ExtInt x) const {
    for (const FilterFn& f : fns_) x = f(x);
    return x;
  }
  ExtVector apply(ExtSpan v) const;
  bool preserves_star() const noexcept;
  /// True when the chain can never produce an integer (e.g. even then odd).
  bool is_empty_map() const noexcept { return empty_; }

  /// Conservative image of an input range.
  ValueRange image(ValueRange in) const;

  /// Comma-joined filter tags; "id" for the empty chain.
  std::string tag() const;
  static FilterChain parse(const std::string& tag);

  friend bool operator==(const FilterChain& a, const FilterChain& b) { return a.tag() == b.tag(); }

 private:
  std::vector<FilterFn> fns_;
  bool empty_ = false;
};

ExtVector apply_filter(const FilterFn& f, ExtSpan v);

}  // namespace hamred
