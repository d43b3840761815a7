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
#include "hamred/scores.hpp"

namespace hamred {

/// Brute-force reference operators. Written as literal loops straight from
/// the definitions; nothing here is shared with the fast paths.

/// Σ_i a[i] ⋄ b[i].
Wide vprod_naive(const ScoreFunction& f, ExtSpan a, ExtSpan b);

/// c[k] = Σ_{i+j=k} a[i] ⋄ b[j], length |a| + |b| - 1.
WideVector conv_naive(const ScoreFunction& f, ExtSpan a, ExtSpan b);

/// C[i][j] = Σ_k A[i][k] ⋄ B[k][j], row-major rows(A) x cols(B).
WideVector mprod_naive(const ScoreFunction& f, const ExtMatrix& A, const ExtMatrix& B);

/// O[i] = Σ_j P[j] ⋄ T[i+j] for i in [0, n - m].
WideVector pm_naive_raw(const ScoreFunction& f, ExtSpan text, ExtSpan pattern);

}  // namespace hamred
