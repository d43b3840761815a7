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
#include <limits>
#include <thread>

#include "hamred/numerics.hpp"
#include "hamred/simd/kernels.hpp"

namespace hamred {

DenseMatrix::DenseMatrix(std::size_t r, std::size_t c, IntVector values) : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != r * c) throw DimensionError("DenseMatrix entry count does not match shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix matmul_naive(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  DenseMatrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < A.cols; ++k) acc = checked_add(acc, checked_mul(A.at(i, k), B.at(k, j)));
      C.at(i, j) = acc;
    }
  return C;
}

namespace {

Wide max_abs(const IntVector& v) {
  Wide m = 0;
  for (Int x : v) m = std::max(m, wide_abs(x));
  return m;
}

void multiply_rows(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C, std::size_t r0, std::size_t r1) {
  const simd::Kernels& k = simd::active();
  for (std::size_t i = r0; i < r1; ++i) {
    Int* out = C.data.data() + i * C.cols;
    for (std::size_t t = 0; t < A.cols; ++t) {
      const Int a = A.at(i, t);
      if (a == 0) continue;
      k.axpy_i64(out, B.data.data() + t * B.cols, a, B.cols);
    }
  }
}

}  // namespace

DenseMatrix matmul_dense(const DenseMatrix& A, const DenseMatrix& B, unsigned threads) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  // Every partial sum is bounded by the final bound, so wrapping arithmetic
  // in the kernel is exact once this holds.
  const Wide bound = max_abs(A.data) * max_abs(B.data) * static_cast<Wide>(A.cols);
  if (bound > std::numeric_limits<Int>::max()) throw BoundError("matrix product may exceed 64 bits");
  DenseMatrix C(A.rows, B.cols);
  if (A.rows == 0 || B.cols == 0) return C;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(A.rows)));
  if (threads == 1) {
    multiply_rows(A, B, C, 0, A.rows);
    return C;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (A.rows + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t r0 = t * chunk;
    const std::size_t r1 = std::min(A.rows, r0 + chunk);
    if (r0 >= r1) break;
    pool.emplace_back([&, r0, r1] { multiply_rows(A, B, C, r0, r1); });
  }
  for (auto& th : pool) th.join();
  return C;
}

}  // namespace hamred
