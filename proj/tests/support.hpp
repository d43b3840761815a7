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

// Generators and reference implementations for the tests. The references
// are written from the score definitions directly and share nothing with
// the library's evaluation paths beyond the value types.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "hamred/ext_int.hpp"
#include "hamred/numerics.hpp"
#include "hamred/rng.hpp"
#include "hamred/scores.hpp"

namespace testing {

using hamred::DenseMatrix;
using hamred::ExtInt;
using hamred::ExtMatrix;
using hamred::ExtSpan;
using hamred::ExtVector;
using hamred::Int;
using hamred::kStar;
using hamred::ScoreFunction;
using hamred::ScoreKind;
using hamred::SplitMix64;
using hamred::Wide;
using hamred::WideVector;

inline ExtVector random_vec(SplitMix64& rng, std::size_t n, Int lo, Int hi, double star_share = 0.0) {
  ExtVector v(n);
  for (auto& x : v) x = rng.chance(star_share) ? kStar : ExtInt(rng.range(lo, hi));
  return v;
}

inline ExtMatrix random_mat(SplitMix64& rng, std::size_t r, std::size_t c, Int lo, Int hi, double star_share = 0.0) {
  return ExtMatrix(r, c, random_vec(rng, r * c, lo, hi, star_share));
}

inline hamred::IntVector random_ints(SplitMix64& rng, std::size_t n, Int lo, Int hi) {
  hamred::IntVector v(n);
  for (auto& x : v) x = rng.range(lo, hi);
  return v;
}

inline hamred::SparseBinaryMatrix random_sparse(SplitMix64& rng, std::size_t r, std::size_t c, double fill) {
  hamred::SparseBinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.chance(fill)) m.nonzeros.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  return m;
}

inline Wide ipow(Wide b, unsigned e) {
  Wide r = 1;
  while (e--) r *= b;
  return r;
}

/// x ⋄ y straight from the definitions; 0 when either side is ★.
inline Wide ref_score(const ScoreFunction& f, ExtInt ex, ExtInt ey) {
  if (ex.is_star() || ey.is_star()) return 0;
  const Wide x = ex.value();
  const Wide y = ey.value();
  const Wide diff = x > y ? x - y : y - x;
  switch (f.kind()) {
    case ScoreKind::ham: return x != y ? 1 : 0;
    case ScoreKind::dom: return x <= y ? 1 : 0;
    case ScoreKind::thr: return diff >= f.param() ? 1 : 0;
    case ScoreKind::l1: return diff;
    case ScoreKind::l2p: return ipow(diff, 2 * static_cast<unsigned>(f.param()));
    case ScoreKind::l2p1: return ipow(diff, 2 * static_cast<unsigned>(f.param()) + 1);
    case ScoreKind::min: return x < y ? x : y;
    case ScoreKind::max: return x < y ? y : x;
    case ScoreKind::eq: return x == y ? 1 : 0;
    case ScoreKind::mult: return x * y;
    case ScoreKind::weighted_eq: return x == y ? f.weight()(static_cast<Int>(x)) : 0;
    case ScoreKind::piecewise: {
      Wide total = 0;
      for (const auto& s : f.pp().summands) {
        if (!(s.A * x + s.B * y + s.C > 0)) continue;
        for (unsigned a = 0; a <= s.poly.deg_x(); ++a)
          for (unsigned b = 0; b <= s.poly.deg_y(); ++b) total += s.poly.coef(a, b) * ipow(x, a) * ipow(y, b);
      }
      return total;
    }
  }
  std::abort();
}

inline Wide ref_vprod(const ScoreFunction& f, ExtSpan a, ExtSpan b) {
  Wide t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += ref_score(f, a[i], b[i]);
  return t;
}

inline WideVector ref_conv(const ScoreFunction& f, ExtSpan a, ExtSpan b) {
  WideVector c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += ref_score(f, a[i], b[j]);
  return c;
}

/// O[i] = Σ_j f(P[j], T[i + j]).
inline WideVector ref_pm(const ScoreFunction& f, ExtSpan text, ExtSpan pattern) {
  WideVector o(text.size() - pattern.size() + 1, 0);
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = 0; j < pattern.size(); ++j) o[i] += ref_score(f, pattern[j], text[i + j]);
  return o;
}

/// C[i, j] = Σ_k f(A[i, k], B[k, j]), row-major.
inline WideVector ref_mprod(const ScoreFunction& f, const ExtMatrix& A, const ExtMatrix& B) {
  WideVector c(A.rows * B.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j)
      for (std::size_t k = 0; k < A.cols; ++k) c[i * B.cols + j] += ref_score(f, A.at(i, k), B.at(k, j));
  return c;
}

/// O[i][j] = Σ_k f(left[i][k], right[j][k]).
inline DenseMatrix ref_ap(const ScoreFunction& f, const ExtMatrix& left, const ExtMatrix& right) {
  DenseMatrix o(left.rows, right.rows);
  for (std::size_t i = 0; i < left.rows; ++i)
    for (std::size_t j = 0; j < right.rows; ++j)
      o.at(i, j) = static_cast<Int>(ref_vprod(f, left.row_span(i), right.row_span(j)));
  return o;
}

inline DenseMatrix ref_matmul(const DenseMatrix& A, const DenseMatrix& B) {
  DenseMatrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j)
      for (std::size_t k = 0; k < A.cols; ++k) C.at(i, j) += A.at(i, k) * B.at(k, j);
  return C;
}

inline WideVector ref_int_conv(const hamred::IntVector& a, const hamred::IntVector& b) {
  WideVector c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += Wide{a[i]} * b[j];
  return c;
}

inline ExtMatrix row(ExtVector v) { return ExtMatrix::row(std::move(v)); }

inline ExtVector ev(std::initializer_list<Int> xs) {
  ExtVector v;
  for (Int x : xs) v.push_back(x == INT64_MIN ? kStar : ExtInt(x));
  return v;
}

/// Marker for ★ inside ev{...}.
inline constexpr Int S = INT64_MIN;

}  // namespace testing
