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

#include "hamred/ext_int.hpp"
#include "hamred/numerics.hpp"
#include "hamred/reductions.hpp"
#include "hamred/scores.hpp"

namespace hamred {

/// O[i][j] = Σ_k score(left[i][k], right[j][k]). Both sides store one
/// vector per row and share the column count d.
struct ApInstance {
  ExtMatrix left;
  ExtMatrix right;
  ScoreFunction score;
};

DenseMatrix ap_naive(const ApInstance& inst);

struct ApHamStats {
  /// Width of the 0/1 expansion (distinct values summed over coordinates).
  std::size_t expansion_width = 0;
  std::size_t ell = 0;
  SparseMatmulStats matches;
};

struct ApHamOptions {
  /// Route inner indices past rank ell through the light phase. Off means
  /// every index goes to the dense phase.
  bool truncate = true;
  /// 0 picks min(d^2, width).
  std::size_t ell = 0;
};

/// ★-aware all-pairs Hamming distance through 0/1 expansion matrices:
/// overlap(i, j) - matches(i, j).
DenseMatrix apham_via_expansion(const ExtMatrix& left, const ExtMatrix& right, const ApHamOptions& opts = {},
                                ApHamStats* stats = nullptr);

/// Runs `plan` as matrix products, one backend call per term.
DenseMatrix generic_ap(const ApInstance& inst, const LinearReduction& plan, const SolverRegistry& backend,
                       const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// All-pairs Hamming distance tuned for sparse inputs: the dense phase keeps
/// about m1 m2 / n^2 inner indices, where m1 and m2 count non-★ entries.
DenseMatrix apham_sparse_inputs(const ExtMatrix& left, const ExtMatrix& right, ApHamStats* stats = nullptr);

/// Both-non-★ coordinate counts per pair.
DenseMatrix overlap_counts(const ExtMatrix& left, const ExtMatrix& right);

}  // namespace hamred
