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

#include "hamred/sparse_bridge.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hamred/rng.hpp"

namespace hamred {

namespace {

unsigned bit_length(const DenseMatrix& m) {
  std::uint64_t top = 1;
  for (Int v : m.data) {
    if (v == std::numeric_limits<Int>::min()) throw BoundError("entry magnitude exceeds int64");
    top = std::max<std::uint64_t>(top, static_cast<std::uint64_t>(v < 0 ? -v : v));
  }
  return floor_log2(top) + 1;
}

std::uint64_t magnitude(Int v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

}  // namespace

BitSlicePlan int_to_01(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  BitSlicePlan p;
  p.rows = A.rows;
  p.inner = A.cols;
  p.cols = B.cols;
  p.bits_a = bit_length(A);
  p.bits_b = bit_length(B);
  p.a = SparseBinaryMatrix(2 * p.bits_a * A.rows, A.cols);
  p.b = SparseBinaryMatrix(B.rows, 2 * p.bits_b * B.cols);
  // A = A1 - A2 with A1, A2 >= 0; each part split into its binary digits.
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Int v = A.at(i, k);
      const std::size_t sign = v < 0;
      for (unsigned bit = 0; bit < p.bits_a; ++bit)
        if ((magnitude(v) >> bit) & 1)
          p.a.nonzeros.emplace_back(static_cast<std::uint32_t>((sign * p.bits_a + bit) * A.rows + i),
                                    static_cast<std::uint32_t>(k));
    }
  for (std::size_t k = 0; k < B.rows; ++k)
    for (std::size_t j = 0; j < B.cols; ++j) {
      const Int v = B.at(k, j);
      const std::size_t sign = v < 0;
      for (unsigned bit = 0; bit < p.bits_b; ++bit)
        if ((magnitude(v) >> bit) & 1)
          p.b.nonzeros.emplace_back(static_cast<std::uint32_t>(k),
                                    static_cast<std::uint32_t>((sign * p.bits_b + bit) * B.cols + j));
    }
  p.a.canonicalize();
  p.b.canonicalize();
  return p;
}

DenseMatrix BitSlicePlan::recombine(const DenseMatrix& product) const {
  if (product.rows != a.rows || product.cols != b.cols) throw DimensionError("bit-slice product has the wrong shape");
  DenseMatrix C(rows, cols);
  for (std::size_t sa = 0; sa < 2; ++sa)
    for (unsigned ba = 0; ba < bits_a; ++ba)
      for (std::size_t sb = 0; sb < 2; ++sb)
        for (unsigned bb = 0; bb < bits_b; ++bb) {
          const std::size_t r0 = (sa * bits_a + ba) * rows;
          const std::size_t c0 = (sb * bits_b + bb) * cols;
          const Int scale = (sa == sb ? 1 : -1) * checked_pow<Int>(2, ba + bb);
          for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
              C.at(i, j) = checked_add(C.at(i, j), checked_mul(scale, product.at(r0 + i, c0 + j)));
        }
  return C;
}

HamToSparse apham_to_sparse(const ExtMatrix& U, const ExtMatrix& V) {
  if (U.cols != V.cols) throw DimensionError("all-pairs sides differ in dimension");
  const std::size_t d = U.cols;
  HamToSparse out;
  out.dim = d;

  // Rename each coordinate to the rank of its value among that column's
  // distinct non-★ values, so column k uses offset[k] .. offset[k+1].
  std::vector<std::size_t> offset(d + 1, 0);
  std::vector<std::vector<Int>> ranks(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Int>& vals = ranks[k];
    for (std::size_t i = 0; i < U.rows; ++i)
      if (!U.at(i, k).is_star()) vals.push_back(U.at(i, k).value());
    for (std::size_t j = 0; j < V.rows; ++j)
      if (!V.at(j, k).is_star()) vals.push_back(V.at(j, k).value());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    offset[k + 1] = offset[k] + vals.size();
  }
  auto column = [&](std::size_t k, Int v) {
    const auto& vals = ranks[k];
    return static_cast<std::uint32_t>(offset[k] + (std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()));
  };

  out.a = SparseBinaryMatrix(U.rows, offset[d]);
  out.b = SparseBinaryMatrix(offset[d], V.rows);
  SparseBinaryMatrix mu(U.rows, d);
  SparseBinaryMatrix mv(d, V.rows);
  for (std::size_t i = 0; i < U.rows; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (!U.at(i, k).is_star()) {
        out.a.nonzeros.emplace_back(static_cast<std::uint32_t>(i), column(k, U.at(i, k).value()));
        mu.nonzeros.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k));
      }
  for (std::size_t j = 0; j < V.rows; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (!V.at(j, k).is_star()) {
        out.b.nonzeros.emplace_back(column(k, V.at(j, k).value()), static_cast<std::uint32_t>(j));
        mv.nonzeros.emplace_back(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j));
      }
  out.b.canonicalize();
  mv.canonicalize();
  out.overlap = sparse_matmul(mu, mv, d);
  return out;
}

DenseMatrix HamToSparse::decode(const DenseMatrix& C) const {
  if (C.rows != overlap.rows || C.cols != overlap.cols) throw DimensionError("product has the wrong shape");
  DenseMatrix ham(C.rows, C.cols);
  for (std::size_t i = 0; i < C.data.size(); ++i) ham.data[i] = overlap.data[i] - C.data[i];
  return ham;
}

DenseMatrix HamToSparse::multiply(bool truncate, SparseMatmulStats* stats) const {
  const std::size_t ell = truncate ? std::min(dim * dim, a.cols) : a.cols;
  return sparse_matmul(a, b, ell, stats);
}

double split_row_limit(std::size_t n, std::size_t nnz, std::size_t dim, double kappa) {
  const double lg = std::ceil(std::log2(static_cast<double>(n) + 2));
  return kappa * (static_cast<double>(n) + static_cast<double>(nnz) / static_cast<double>(dim)) * lg;
}

namespace {

// Splits each line (a row of A or a column of B) so that every bucket holds
// at most one of its inner indices per split row. Returns the per-line
// split counts and fills `cells` with (split row, bucket, inner index).
struct Placement {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> counts;
  std::vector<std::array<std::size_t, 3>> cells;
};

Placement place(const std::vector<std::vector<std::uint32_t>>& lines, const std::vector<std::uint32_t>& pi,
                std::size_t dim) {
  Placement p;
  p.offsets.resize(lines.size());
  p.counts.resize(lines.size());
  std::vector<std::size_t> seen(dim, 0);
  std::size_t next_row = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t c = 0;
    p.offsets[i] = next_row;
    for (std::uint32_t l : lines[i]) {  // ascending l
      const std::size_t k = pi[l];
      const std::size_t t = seen[k]++;
      c = std::max(c, t + 1);
      p.cells.push_back({next_row + t, k, l});
    }
    p.counts[i] = c;
    next_row += c;
  }
  return p;
}

ExtMatrix fill(const Placement& p, std::size_t rows, std::size_t dim, Int base, Int parity) {
  ExtMatrix m(rows, dim);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < dim; ++k)
      m.at(r, k) = ExtInt::from_wide(Wide{base} + 2 * (Wide(k) * Wide(rows) + Wide(r)) + parity);
  for (const auto& [r, k, l] : p.cells) m.at(r, k) = ExtInt(static_cast<Int>(l));
  return m;
}

}  // namespace

SparseToHam sparse_to_apham(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B, std::uint64_t seed,
                            const SparseToHamOptions& opts) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  A.validate();
  B.validate();
  const std::size_t n = std::max<std::size_t>({A.rows, B.cols, 1});
  const std::size_t inner = std::max<std::size_t>(n, (A.cols + n - 1) / n * n);
  const std::size_t dim = inner / n;

  std::vector<std::vector<std::uint32_t>> rows_of_a(A.rows);
  std::vector<std::vector<std::uint32_t>> cols_of_b(B.cols);
  for (const auto& [r, c] : A.nonzeros) rows_of_a[r].push_back(c);
  for (const auto& [r, c] : B.nonzeros) cols_of_b[c].push_back(r);
  for (auto& v : rows_of_a) std::sort(v.begin(), v.end());
  for (auto& v : cols_of_b) std::sort(v.begin(), v.end());

  SparseToHam out;
  out.rows = A.rows;
  out.cols = B.cols;
  const double limit_a = split_row_limit(n, A.nnz(), dim, opts.kappa);
  const double limit_b = split_row_limit(n, B.nnz(), dim, opts.kappa);
  out.row_limit = limit_a;

  for (unsigned attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const std::uint64_t draw_seed = attempt == 0 ? seed : SplitMix64(seed + attempt).next();
    SplitMix64 rng(draw_seed);
    std::vector<std::uint32_t> pi(inner);
    for (auto& k : pi) k = static_cast<std::uint32_t>(rng.below(dim));

    Placement pu = place(rows_of_a, pi, dim);
    Placement pv = place(cols_of_b, pi, dim);
    std::size_t ru = 0;
    std::size_t rv = 0;
    for (std::size_t c : pu.counts) ru += c;
    for (std::size_t c : pv.counts) rv += c;
    if (static_cast<double>(ru) > limit_a || static_cast<double>(rv) > limit_b) continue;

    out.attempts = attempt + 1;
    out.split = SplitMap{draw_seed, inner, dim, std::move(pi), pu.offsets, pu.counts, pv.offsets, pv.counts};
    // Real cells carry inner indices < inner; sentinels start at 2 inner and
    // differ in parity between U and V, so only real cells can match.
    out.U = fill(pu, ru, dim, static_cast<Int>(2 * inner), 0);
    out.V = fill(pv, rv, dim, static_cast<Int>(2 * inner), 1);
    return out;
  }
  throw ReductionError("row splitting rejected " + std::to_string(opts.max_attempts) + " draws");
}

DenseMatrix SparseToHam::decode(const DenseMatrix& ham) const {
  if (ham.rows != U.rows || ham.cols != V.rows) throw DimensionError("Hamming matrix has the wrong shape");
  const Int d = static_cast<Int>(split.dim);
  DenseMatrix C(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int acc = 0;
      for (std::size_t a = 0; a < split.row_counts[i]; ++a)
        for (std::size_t b = 0; b < split.col_counts[j]; ++b)
          acc += d - ham.at(split.row_offsets[i] + a, split.col_offsets[j] + b);
      C.at(i, j) = acc;
    }
  return C;
}

}  // namespace hamred
