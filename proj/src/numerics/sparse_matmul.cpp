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
#include <cmath>
#include <numeric>

#include "hamred/numerics.hpp"
#include "hamred/simd/kernels.hpp"

namespace hamred {

void SparseBinaryMatrix::validate() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted = nonzeros;
  for (const auto& [r, c] : sorted)
    if (r >= rows || c >= cols) throw DimensionError("sparse coordinate out of range");
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DimensionError("duplicate sparse coordinate");
}

void SparseBinaryMatrix::canonicalize() {
  std::sort(nonzeros.begin(), nonzeros.end());
  nonzeros.erase(std::unique(nonzeros.begin(), nonzeros.end()), nonzeros.end());
}

DenseMatrix SparseBinaryMatrix::to_dense() const {
  DenseMatrix m(rows, cols);
  for (const auto& [r, c] : nonzeros) m.at(r, c) = 1;
  return m;
}

SparseBinaryMatrix SparseBinaryMatrix::from_dense(const DenseMatrix& m) {
  SparseBinaryMatrix s(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const Int v = m.at(r, c);
      if (v == 0) continue;
      if (v != 1) throw DimensionError("matrix is not 0/1");
      s.nonzeros.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c));
    }
  return s;
}

std::size_t default_ell(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B) {
  const double cells = static_cast<double>(std::max<std::size_t>(1, A.rows * B.cols));
  const double ratio = static_cast<double>(A.nnz()) * static_cast<double>(B.nnz()) / cells;
  const auto base = static_cast<std::size_t>(std::ceil(std::sqrt(ratio)));
  return std::min(A.cols, base * 4);
}

DenseMatrix sparse_matmul(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B, std::size_t ell,
                          SparseMatmulStats* stats) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  const std::size_t inner = A.cols;
  ell = std::min(ell, inner);

  // Column lists of A and row lists of B per inner index.
  std::vector<std::vector<std::uint32_t>> a_col(inner);
  std::vector<std::vector<std::uint32_t>> b_row(inner);
  for (const auto& [r, c] : A.nonzeros) a_col[c].push_back(r);
  for (const auto& [r, c] : B.nonzeros) b_row[r].push_back(c);

  std::vector<std::uint32_t> order(inner);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return a_col[x].size() * b_row[x].size() > a_col[y].size() * b_row[y].size();
  });

  DenseMatrix C(A.rows, B.cols);

  // Heavy phase: bitset rows of A and bitset columns of B over the first ell
  // inner indices, combined with popcount-AND.
  if (ell > 0) {
    const std::size_t words = (ell + 63) / 64;
    std::vector<std::uint64_t> a_bits(A.rows * words, 0);
    std::vector<std::uint64_t> b_bits(B.cols * words, 0);
    for (std::size_t h = 0; h < ell; ++h) {
      const std::uint32_t idx = order[h];
      for (std::uint32_t r : a_col[idx]) a_bits[r * words + h / 64] |= std::uint64_t{1} << (h % 64);
      for (std::uint32_t c : b_row[idx]) b_bits[c * words + h / 64] |= std::uint64_t{1} << (h % 64);
    }
    const simd::Kernels& k = simd::active();
    for (std::size_t r = 0; r < A.rows; ++r) {
      const std::uint64_t* ar = a_bits.data() + r * words;
      for (std::size_t c = 0; c < B.cols; ++c)
        C.at(r, c) += static_cast<Int>(k.popcount_and(ar, b_bits.data() + c * words, words));
    }
  }

  std::uint64_t light = 0;
  for (std::size_t h = ell; h < inner; ++h) {
    const std::uint32_t idx = order[h];
    for (std::uint32_t r : a_col[idx])
      for (std::uint32_t c : b_row[idx]) C.at(r, c) += 1;
    light += static_cast<std::uint64_t>(a_col[idx].size()) * b_row[idx].size();
  }

  std::uint64_t bound = 0;
  if (ell >= 1) {
    const std::uint64_t m1m2 = static_cast<std::uint64_t>(A.nnz()) * B.nnz();
    bound = (m1m2 + ell - 1) / ell;
    if (light > bound) throw ReductionError("light phase exceeded its pair bound");
  }
  if (stats) {
    stats->heavy_indices = ell;
    stats->light_pairs = light;
    stats->light_bound = bound;
  }
  return C;
}

}  // namespace hamred
