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

#include "hamred/all_pairs.hpp"
#include "hamred/pattern_matching.hpp"
#include "hamred/reductions.hpp"

namespace hamred {

namespace {

WideVector from_dense(const DenseMatrix& m) { return WideVector(m.data.begin(), m.data.end()); }

ExtMatrix indicator(const ExtMatrix& m) {
  ExtMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = m.data[i].is_star() ? kStar : ExtInt(1);
  return out;
}

WideVector ham_product(Product op, const ExtMatrix& a, const ExtMatrix& b) {
  switch (op) {
    case Product::vprod: {
      Wide total = 0;
      for (std::size_t i = 0; i < a.data.size(); ++i) {
        const ExtInt x = a.data[i];
        const ExtInt y = b.data[i];
        total += !x.is_star() && !y.is_star() && x.value() != y.value();
      }
      return {total};
    }
    case Product::conv: {
      // Σ_{i+j=k} Ham(a_i, b_j) is pattern matching of reversed a against b
      // padded with m - 1 stars on each side.
      const std::size_t m = a.data.size();
      ExtVector pattern(a.data.rbegin(), a.data.rend());
      ExtVector text(b.data.size() + 2 * (m - 1), kStar);
      std::copy(b.data.begin(), b.data.end(), text.begin() + static_cast<std::ptrdiff_t>(m - 1));
      return ham_pm_bucketed(text, pattern);
    }
    case Product::pm: return ham_pm_bucketed(b.data, a.data);
    case Product::mprod: return from_dense(apham_via_expansion(a, b.transposed()));
  }
  return {};
}

WideVector mult_product(Product op, const ExtMatrix& a, const ExtMatrix& b, unsigned threads) {
  const IntVector x = star_to_zero(a.data);
  const IntVector y = star_to_zero(b.data);
  switch (op) {
    case Product::vprod: {
      Wide total = 0;
      for (std::size_t i = 0; i < x.size(); ++i) total = checked_add(total, checked_mul<Wide>(x[i], y[i]));
      return {total};
    }
    case Product::conv: return conv_mult(x, y);
    case Product::pm: {
      const std::size_t m = x.size();
      const IntVector rev(x.rbegin(), x.rend());
      const WideVector c = conv_mult(rev, y);
      return WideVector(c.begin() + static_cast<std::ptrdiff_t>(m - 1), c.begin() + static_cast<std::ptrdiff_t>(y.size()));
    }
    case Product::mprod:
      return from_dense(matmul_dense(DenseMatrix(a.rows, a.cols, x), DenseMatrix(b.rows, b.cols, y), threads));
  }
  return {};
}

}  // namespace

SolverRegistry fast_registry(unsigned threads) {
  SolverRegistry r;
  r.add(ScoreKind::ham, [](Product op, const ScoreFunction&, const ExtMatrix& a, const ExtMatrix& b) {
    return ham_product(op, a, b);
  });
  r.add(ScoreKind::mult, [threads](Product op, const ScoreFunction&, const ExtMatrix& a, const ExtMatrix& b) {
    return mult_product(op, a, b, threads);
  });
  // Eq counts both-non-★ pairs and subtracts the mismatches.
  r.add(ScoreKind::eq, [threads](Product op, const ScoreFunction&, const ExtMatrix& a, const ExtMatrix& b) {
    WideVector out = mult_product(op, indicator(a), indicator(b), threads);
    const WideVector ham = ham_product(op, a, b);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= ham[i];
    return out;
  });
  r.add(ScoreKind::dom, [](Product op, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b) {
    if (op == Product::pm) return sparse_lessthan_pm(b.data, a.data);
    return naive_product(op, f, a, b);
  });
  r.add(ScoreKind::l2p, [](Product op, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b) {
    if (op == Product::pm) return l2p_pm_fft(b.data, a.data, static_cast<unsigned>(f.param()));
    return naive_product(op, f, a, b);
  });
  return r;
}

}  // namespace hamred
