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

#include "hamred/common.hpp"

#include <algorithm>

#include "hamred/ext_int.hpp"

namespace hamred {

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the unsigned magnitude so INT128_MIN does not overflow.
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1u : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10u)));
    u /= 10u;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

void check_bound(ExtSpan values, Int bound) {
  for (ExtInt v : values) {
    if (v.is_star()) continue;
    if (v.value() > bound || v.value() < -bound)
      throw BoundError("entry " + std::to_string(v.value()) + " exceeds declared bound " + std::to_string(bound));
  }
}

std::size_t count_relevant(ExtSpan values) {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](ExtInt v) { return !v.is_star(); }));
}

}  // namespace hamred
