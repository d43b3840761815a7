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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamred/ext_int.hpp"
#include "hamred/numerics.hpp"
#include "hamred/rational.hpp"
#include "hamred/scores.hpp"

namespace hamred {

/// Magnitude used for reductions that accept any integer input.
inline constexpr Wide kUnbounded = Wide{1} << 62;

/// alpha * (f(x) target g(y)).
struct ReductionTerm {
  Rational alpha;
  ScoreFunction target;
  FilterChain f;
  FilterChain g;
};

/// x ⋄ y = Σ constant_part + Σ terms for every x, y in [lo, hi].
///
/// constant_part holds the Mult-target terms of the form p(x) * q(y) that
/// some reductions need besides their main instances; they are applied
/// through the multiplication backend like any other term.
struct LinearReduction {
  std::string name;
  ScoreFunction source;
  Wide lo = -kUnbounded;
  Wide hi = kUnbounded;
  std::vector<ReductionTerm> terms;
  std::vector<ReductionTerm> constant_part;
  /// False when some filter turns ★ into an integer; such reductions are
  /// still exact because their terms cancel on ★.
  bool preserves_star = true;

  std::size_t backend_calls() const noexcept { return terms.size() + constant_part.size(); }
  std::size_t count_target(ScoreKind kind) const;
};

/// Σ alpha_i (f_i(x) □_i g_i(y)) + constant part, as an exact integer.
/// Throws ReductionError if the aggregate is not integral.
Wide evaluate(const LinearReduction& r, ExtInt x, ExtInt y);

/// Structural check: every filter maps ★ to ★.
bool filters_preserve_star(const LinearReduction& r);

LinearReduction identity_reduction(const ScoreFunction& s);

/// Merges terms with identical target and filters and drops zero or
/// provably empty ones. Term order follows first occurrence.
void simplify(LinearReduction& r);

// ---------------------------------------------------------------------------
// Catalog

/// |x - y| on [0, M) as 4(floor(log2 M) + 1) dominance terms.
LinearReduction reduce_l1_to_dom(Int M);
/// Dom on [0, M) as floor(log2 M) + 1 Hamming terms plus the
/// 1 - Σ 1[x_i odd] multiplication part.
LinearReduction reduce_dom_to_ham(Int M);
/// Ham(x,y) = Ham(f(x), f(y)) - Ham(g(x), g(y)) with f(★)=0, f(t)=t+1,
/// g(★)=0, g(t)=1; inputs must be nonnegative.
LinearReduction eliminate_stars_ham();
LinearReduction reduce_thr_to_dom(Int delta);
/// Dom on [0, M) through Thr_delta; requires delta > M.
LinearReduction reduce_dom_to_thr(Int delta, Int M);
LinearReduction reduce_ham_to_dom();
LinearReduction reduce_dom_to_l1();
LinearReduction reduce_ham_to_l1();
LinearReduction reduce_min_to_l1();
LinearReduction reduce_l1_to_min();
/// w(x)[x = y] as Σ 2^i Eq(w_i(x), w_i(y)) for bits of W; weights on
/// [lo, hi] are checked against W.
LinearReduction reduce_weighted_eq_to_ham(const WeightFn& w, Int W, Wide lo = -kUnbounded, Wide hi = kUnbounded);
/// Eq = Mult(1, 1) - Ham, both sides ★-aware.
LinearReduction reduce_eq_to_ham();
LinearReduction reduce_axis_orthogonal_to_mult(const PiecewisePolynomial& pp);

struct MdomStats {
  std::uint64_t eq_terms = 0;
  std::uint64_t nodes = 0;
};

/// x^a y^b 1[x < y] on [0, M) unwound into Eq terms (and nothing else).
LinearReduction reduce_mdom_to_ham(unsigned a, unsigned b, Int M, MdomStats* stats = nullptr);
/// Counts the Eq terms reduce_mdom_to_ham would emit without building them.
MdomStats count_mdom_terms(unsigned a, unsigned b, Int M);
/// The closed-form bound C m max(a+b, 1) multinomial(a+b+m; a, b, m) 4^(a+b).
Wide mdom_term_bound(unsigned a, unsigned b, unsigned m);
/// The constant C used by mdom_term_bound.
inline constexpr Int kMdomBoundConstant = 2;

/// Piecewise polynomial on [lo, hi]^2 as Ham and Mult terms.
LinearReduction reduce_piecewise_to_ham(const PiecewisePolynomial& pp, Wide lo, Wide hi);

/// Any score on [lo, hi]^2 lowered to Ham and Mult targets only.
LinearReduction lower_to_hamming(const ScoreFunction& s, Wide lo, Wide hi);

/// Replaces every term whose target is not Ham or Mult using
/// lower_to_hamming over the image of its filters.
LinearReduction lower_terms(const LinearReduction& r);

// ---------------------------------------------------------------------------
// Hamming to piecewise (grid construction)

struct Line {
  Int A = 0;
  Int B = 0;
  Int C = 0;
};

struct GridParams {
  std::size_t index = 0;  // chosen line
  Wide alpha = 0;
  Wide beta = 0;
  Wide gamma = 0;
  Wide delta = 0;
};

/// Picks a non-axis-orthogonal line and a grid {(alpha x + gamma,
/// beta y + delta) : x, y in [0, N]} whose diagonal lies on it. Lines are
/// read as halfplanes A u + B v + C > 0. Throws ReductionError if every
/// line is axis-orthogonal. `skip` excludes already rejected lines.
GridParams lines_lemma_select(const std::vector<Line>& lines, Wide N, const std::vector<std::size_t>& skip = {});

/// Direct check of the grid conditions: every halfplane not parallel to the
/// chosen line has a constant indicator on the grid, and every parallel one
/// has a constant indicator on {x > y} and on {x < y}.
bool verify_grid(const std::vector<Line>& lines, const GridParams& g, Wide N);

struct HamToPiecewisePlan {
  GridParams grid;
  Wide N = 0;
  Int spacing = 0;
  Int offset = 0;
  unsigned a = 0;
  unsigned b = 0;
  Wide c = 0;
  /// Set when ⋄ agrees on both sides of every usable line and only jumps on
  /// the line itself; Eq then comes from D^a along the diagonal, a c ≠ 0.
  bool diagonal = false;
  Poly2 q_gt;
  Poly2 q_lt;
  /// Dom on [0, M] using ⋄ and Mult targets.
  LinearReduction dom_plan;
  /// Ham on [0, M - 1] built on dom_plan (or the other way round when
  /// `diagonal` is set).
  LinearReduction ham_plan;
};

/// Builds Dom on [0, M] from instances of ⋄ = pp (plus Mult terms), and Ham
/// on [0, M - 1] on top. Throws ReductionError for axis-orthogonal pp.
HamToPiecewisePlan reduce_ham_to_piecewise(const PiecewisePolynomial& pp, Int M);

// ---------------------------------------------------------------------------
// Engine

enum class Product { vprod, conv, mprod, pm };

/// Solves one (+,□) instance. For vprod and conv the operands are 1 x n;
/// for pm `a` is the pattern and `b` the text.
using Solver = std::function<WideVector(Product, const ScoreFunction&, const ExtMatrix&, const ExtMatrix&)>;

class SolverRegistry {
 public:
  void add(ScoreKind kind, Solver s) { solvers_[kind] = std::move(s); }
  bool has(ScoreKind kind) const { return solvers_.count(kind) != 0; }
  WideVector solve(Product p, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b) const;

 private:
  std::map<ScoreKind, Solver> solvers_;
};

/// Oracle-backed solvers for every kind.
SolverRegistry naive_registry();
/// Fast solvers for Ham, Mult and Eq.
SolverRegistry fast_registry(unsigned threads = 1);

struct EngineOptions {
  unsigned threads = 1;
  /// Shift shift-invariant sources into the declared domain when needed.
  bool auto_shift = true;
};

struct EngineStats {
  std::size_t backend_calls = 0;
  std::map<std::string, std::size_t> calls_by_target;
  Wide applied_shift = 0;
};

/// Runs every term through the registry and sums the results exactly.
WideVector apply_reduction(const LinearReduction& r, Product op, const ExtMatrix& a, const ExtMatrix& b,
                           const SolverRegistry& backend, const EngineOptions& opts = {},
                           EngineStats* stats = nullptr);

/// Output length (or rows * cols) of an operator.
std::size_t output_size(Product op, const ExtMatrix& a, const ExtMatrix& b);

/// Oracle for any operator.
WideVector naive_product(Product op, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b);

// ---------------------------------------------------------------------------
// Text form

std::string serialize(const LinearReduction& r);
LinearReduction deserialize(const std::string& text);

}  // namespace hamred
