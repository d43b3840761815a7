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

#include "hamred/all_pairs.hpp"

#include <algorithm>

#include "hamred/oracle.hpp"
#include "hamred/sparse_bridge.hpp"

namespace hamred {

namespace {

void check_ap(const ExtMatrix& left, const ExtMatrix& right) {
  if (left.cols != right.cols) throw DimensionError("all-pairs sides differ in dimension");
}

DenseMatrix to_dense(std::size_t rows, std::size_t cols, const WideVector& v) {
  DenseMatrix out(rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) out.data[i] = narrow(v[i]);
  return out;
}

SparseBinaryMatrix mask(const ExtMatrix& m, bool transpose) {
  SparseBinaryMatrix s = transpose ? SparseBinaryMatrix(m.cols, m.rows) : SparseBinaryMatrix(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < m.cols; ++k)
      if (!m.at(i, k).is_star())
        s.nonzeros.emplace_back(static_cast<std::uint32_t>(transpose ? k : i), static_cast<std::uint32_t>(transpose ? i : k));
  s.canonicalize();
  return s;
}

DenseMatrix apham_with_ell(const ExtMatrix& left, const ExtMatrix& right, std::size_t ell, ApHamStats& st) {
  const HamToSparse e = apham_to_sparse(left, right);
  st.expansion_width = e.a.cols;
  st.ell = std::min(ell, e.a.cols);
  return e.decode(sparse_matmul(e.a, e.b, st.ell, &st.matches));
}

}  // namespace

DenseMatrix ap_naive(const ApInstance& inst) {
  check_ap(inst.left, inst.right);
  DenseMatrix out(inst.left.rows, inst.right.rows);
  for (std::size_t i = 0; i < inst.left.rows; ++i)
    for (std::size_t j = 0; j < inst.right.rows; ++j)
      out.at(i, j) = narrow(vprod_naive(inst.score, inst.left.row_span(i), inst.right.row_span(j)));
  return out;
}

DenseMatrix overlap_counts(const ExtMatrix& left, const ExtMatrix& right) {
  check_ap(left, right);
  if (left.cols == 0) return DenseMatrix(left.rows, right.rows);
  return sparse_matmul(mask(left, false), mask(right, true), left.cols);
}

DenseMatrix apham_via_expansion(const ExtMatrix& left, const ExtMatrix& right, const ApHamOptions& opts,
                                ApHamStats* stats) {
  check_ap(left, right);
  ApHamStats local;
  ApHamStats& st = stats ? *stats : local;
  const std::size_t d = left.cols;
  std::size_t ell = opts.ell != 0 ? opts.ell : d * d;
  if (!opts.truncate) ell = SIZE_MAX;
  return apham_with_ell(left, right, std::max<std::size_t>(ell, 1), st);
}

DenseMatrix apham_sparse_inputs(const ExtMatrix& left, const ExtMatrix& right, ApHamStats* stats) {
  check_ap(left, right);
  ApHamStats local;
  ApHamStats& st = stats ? *stats : local;
  const Wide n = std::max<std::size_t>({left.rows, right.rows, 1});
  const Wide m1 = count_relevant(left.data);
  const Wide m2 = count_relevant(right.data);
  const Wide ell = (m1 * m2 + n * n - 1) / (n * n);
  return apham_with_ell(left, right, static_cast<std::size_t>(std::max<Wide>(ell, 1)), st);
}

DenseMatrix generic_ap(const ApInstance& inst, const LinearReduction& plan, const SolverRegistry& backend,
                       const EngineOptions& opts, EngineStats* stats) {
  check_ap(inst.left, inst.right);
  if (!(plan.source == inst.score))
    throw ReductionError("plan source '" + plan.source.tag() + "' does not match score '" + inst.score.tag() + "'");
  const WideVector v = apply_reduction(plan, Product::mprod, inst.left, inst.right.transposed(), backend, opts, stats);
  return to_dense(inst.left.rows, inst.right.rows, v);
}

}  // namespace hamred
