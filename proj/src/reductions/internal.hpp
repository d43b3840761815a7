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

#include "hamred/reductions.hpp"

namespace hamred::detail {

/// Unwinds alpha * P(u, v) * 1[u < v] with u = fx(x), v = fy(y) taking values
/// in [0, max_value], appending Eq terms to `out` (or only counting them
/// when out is null).
void expand_mdom(const Poly2& P, const Rational& alpha, const FilterChain& fx, const FilterChain& fy, Wide max_value,
                 LinearReduction* out, MdomStats& stats);

/// Appends `inner` to `outer` with every filter prefixed, scaling alphas.
void append_composed(LinearReduction& outer, const Rational& alpha, const FilterChain& fx, const FilterChain& fy,
                     const LinearReduction& inner);

}  // namespace hamred::detail
