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
#include <span>
#include <utility>
#include <vector>

#include "hamred/common.hpp"
#include "hamred/ext_int.hpp"

namespace hamred {

using IntVector = std::vector<Int>;
using WideVector = std::vector<Wide>;

/// ★ -> 0, the embedding that turns (+,×) over ℤ ∪ {★} into plain (+,×).
IntVector star_to_zero(ExtSpan v);

// ---------------------------------------------------------------------------
// Convolution

/// Exact c[k] = Σ_{i+j=k} a[i] b[j]. Exact whenever every |entry| <= 2^32 and
/// both lengths are at most 2^20; outside that range the residue margin is
/// checked and BoundError is raised if it could be exceeded.
WideVector conv_mult(std::span<const Int> a, std::span<const Int> b);

/// Schoolbook convolution, the reference for conv_mult.
WideVector conv_schoolbook(std::span<const Int> a, std::span<const Int> b);

/// Number-theoretic transform modulo one of the built-in primes. Exposed for
/// the kernel equivalence tests.
namespace ntt {
inline constexpr std::uint32_t kPrimes[3] = {998244353u, 167772161u, 469762049u};
/// Cyclic convolution of residues modulo kPrimes[prime]; sizes must be a
/// power of two and equal.
std::vector<std::uint32_t> cyclic_convolution(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                              unsigned prime);
}  // namespace ntt

// ---------------------------------------------------------------------------
// Dense matrices

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  IntVector data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, Int fill = 0) : rows(r), cols(c), data(r * c, fill) {}
  DenseMatrix(std::size_t r, std::size_t c, IntVector values);

  static DenseMatrix identity(std::size_t n);

  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Int at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

/// Exact product; throws BoundError when the result could leave 64 bits.
DenseMatrix matmul_dense(const DenseMatrix& A, const DenseMatrix& B, unsigned threads = 1);

/// Unoptimized triple loop, the reference for matmul_dense.
DenseMatrix matmul_naive(const DenseMatrix& A, const DenseMatrix& B);

// ---------------------------------------------------------------------------
// Sparse 0/1 matrices

struct SparseBinaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Nonzero coordinates (row, col), unique.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nonzeros;

  SparseBinaryMatrix() = default;
  SparseBinaryMatrix(std::size_t r, std::size_t c) : rows(r), cols(c) {}

  std::size_t nnz() const noexcept { return nonzeros.size(); }
  /// Checks ranges and duplicates; throws DimensionError.
  void validate() const;
  /// Sorts coordinates row-major and drops duplicates.
  void canonicalize();
  DenseMatrix to_dense() const;
  static SparseBinaryMatrix from_dense(const DenseMatrix& m);

  friend bool operator==(const SparseBinaryMatrix&, const SparseBinaryMatrix&) = default;
};

struct SparseMatmulStats {
  std::size_t heavy_indices = 0;
  /// Pair accumulations performed outside the dense phase.
  std::uint64_t light_pairs = 0;
  /// ceil(m1 m2 / ell) for ell >= 1, 0 otherwise.
  std::uint64_t light_bound = 0;
};

/// ell = min(inner, ceil(sqrt(m1 m2 / (rows cols))) * 4).
std::size_t default_ell(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B);

/// A x B with the inner indices ordered by |A_{*i}| |B_{i*}| (ties by index);
/// the first ell go through a dense bitset product, the rest by pair
/// enumeration. Throws ReductionError if the light phase exceeds its bound.
DenseMatrix sparse_matmul(const SparseBinaryMatrix& A, const SparseBinaryMatrix& B, std::size_t ell,
                          SparseMatmulStats* stats = nullptr);

}  // namespace hamred
