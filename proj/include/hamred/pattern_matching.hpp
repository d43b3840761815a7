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
#include "hamred/reductions.hpp"
#include "hamred/scores.hpp"

namespace hamred {

/// O[i] = Σ_j score(P[j], T[i + j]) for i in [0, n - m].
struct PmInstance {
  ExtVector text;
  ExtVector pattern;
  ScoreFunction score;
};

WideVector pm_naive(const PmInstance& inst);

struct HamPmStats {
  std::size_t threshold = 0;
  std::size_t frequent_symbols = 0;
  std::size_t convolutions = 0;
  std::uint64_t enumeration_steps = 0;
};

/// ceil(sqrt(m log2(m + 1))).
std::size_t ham_pm_threshold(std::size_t m);

/// Hamming pattern matching. Symbols seen more than `threshold` times in the
/// pattern are counted by convolution, the rest by enumerating occurrences.
/// threshold = 0 picks ham_pm_threshold(m).
WideVector ham_pm_bucketed(ExtSpan text, ExtSpan pattern, std::size_t threshold = 0, HamPmStats* stats = nullptr);

/// O[i] = Σ_j (P[j] - T[i + j])^(2p) with 2p + 1 convolutions; ★ positions
/// contribute nothing.
WideVector l2p_pm_fft(ExtSpan text, ExtSpan pattern, unsigned p);

struct SparsePmStats {
  std::size_t buckets = 0;
  std::size_t convolutions = 0;
  std::uint64_t intra_comparisons = 0;
};

/// O[i] = Σ_j 1[P[j] <= T[i + j]] over non-★ pairs. buckets = 0 picks
/// max(1, ceil(sqrt(s_t s_p / (n log2 m)))).
WideVector sparse_lessthan_pm(ExtSpan text, ExtSpan pattern, std::size_t buckets = 0,
                              SparsePmStats* stats = nullptr);

/// O[i] = Σ_{j : P[j] != T[i + j]} w[j], non-★ pairs only.
WideVector weighted_ham_pm(ExtSpan text, ExtSpan pattern, std::span<const Int> weights);

/// Runs `plan` with one backend call per term; plan.source must equal
/// inst.score.
WideVector generic_pm(const PmInstance& inst, const LinearReduction& plan, const SolverRegistry& backend,
                      const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// Smallest [lo, hi] holding every non-★ entry of both sides; [0, 0] if none.
std::pair<Int, Int> value_range(ExtSpan a, ExtSpan b);

}  // namespace hamred
