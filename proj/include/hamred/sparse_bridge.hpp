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
#include <vector>

#include "hamred/ext_int.hpp"
#include "hamred/numerics.hpp"

namespace hamred {

// Integer matrices as stacked 0/1 bit slices.

struct BitSlicePlan {
  std::size_t rows = 0;   // of A
  std::size_t inner = 0;
  std::size_t cols = 0;   // of B
  unsigned bits_a = 0;
  unsigned bits_b = 0;
  /// Row block (sign, bit) of A' holds bit `bit` of the positive (sign 0)
  /// or negative (sign 1) part of A; column blocks of B' likewise.
  SparseBinaryMatrix a;
  SparseBinaryMatrix b;

  /// A x B from the product A' x B'.
  DenseMatrix recombine(const DenseMatrix& product) const;
};

BitSlicePlan int_to_01(const DenseMatrix& A, const DenseMatrix& B);

// All-pairs Hamming distance to sparse 0/1 products.

struct HamToSparse {
  std::size_t dim = 0;
  /// n1 x width, one nonzero per non-★ entry of U.
  SparseBinaryMatrix a;
  /// width x n2.
  SparseBinaryMatrix b;
  /// Both-non-★ coordinate counts; equals dim everywhere on ★-free inputs.
  DenseMatrix overlap;

  /// Ham(u_i, v_j) = overlap(i, j) - C(i, j).
  DenseMatrix decode(const DenseMatrix& C) const;
  /// A x B with the dense phase cut to min(dim^2, width) inner indices
  /// when `truncate` is set.
  DenseMatrix multiply(bool truncate, SparseMatmulStats* stats = nullptr) const;
};

HamToSparse apham_to_sparse(const ExtMatrix& U, const ExtMatrix& V);

// Sparse 0/1 products to all-pairs Hamming distance (Las Vegas).

struct SplitMap {
  std::uint64_t seed = 0;
  std::size_t inner = 0;   // padded inner dimension
  std::size_t dim = 0;     // buckets, inner / n
  std::vector<std::uint32_t> pi;
  std::vector<std::size_t> row_offsets;
  std::vector<std::size_t> row_counts;
  std::vector<std::size_t> col_offsets;
  std::vector<std::size_t> col_counts;

  std::size_t u_rows() const noexcept { return row_offsets.empty() ? 0 : row_offsets.back() + row_counts.back(); }
  std::size_t v_rows() const noexcept { return col_offsets.empty() ? 0 : col_offsets.back() + col_counts.back(); }
};

struct SparseToHamOptions {
  double kappa = 8.0;
  unsigned max_attempts = 32;
};

struct SparseToHam {
  SplitMap split;
  ExtMatrix U;  // u_rows x dim
  ExtMatrix V;  // v_rows x dim
  unsigned attempts = 0;  // draws taken, 1 when the first was accepted
  double row_limit = 0;   // acceptance bound on the U and V row counts
  std::size_t rows = 0;   // of A
  std::size_t cols = 0;   // of B

  /// A x B from the all-pairs Hamming matrix of (U, V).
  DenseMatrix decode(const DenseMatrix& ham) const;
};

/// kappa (n + nnz / dim) ceil(log2(n + 2)).
double split_row_limit(std::size_t n, std::size_t nnz, std::size_t dim, double kappa);

/// Throws ReductionError after max_attempts rejected draws.
SparseToHam sparse_to_apham(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B, std::uint64_t seed,
                            const SparseToHamOptions& opts = {});

}  // namespace hamred
