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
#include <string>
#include <vector>

#include "hamred/common.hpp"

namespace hamred {

/// An integer or the ignore mark ★. A ★ never contributes to a score and is
/// fixed by every single-argument map.
///
/// Stored as one 64-bit word with INT64_MIN reserved for ★, so vectors of
/// ExtInt can be handed to the kernels as plain int64 arrays.
class ExtInt {
 public:
  static constexpr Int kStarRaw = std::numeric_limits<Int>::min();
  /// Largest magnitude an integer entry may have.
  static constexpr Int kMaxMagnitude = Int{1} << 62;

  constexpr ExtInt() noexcept = default;
  constexpr ExtInt(Int v) : raw_(v) {  // NOLINT(google-explicit-constructor)
    if (v > kMaxMagnitude || v < -kMaxMagnitude) throw BoundError("ExtInt magnitude exceeds 2^62");
  }

  static constexpr ExtInt star() noexcept {
    ExtInt s;
    s.raw_ = kStarRaw;
    return s;
  }

  static ExtInt from_raw(Int raw) { return raw == kStarRaw ? star() : ExtInt(raw); }

  static ExtInt from_wide(Wide v) { return ExtInt(narrow(v)); }

  constexpr bool is_star() const noexcept { return raw_ == kStarRaw; }
  constexpr Int value() const noexcept { return raw_; }
  constexpr Int raw() const noexcept { return raw_; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) noexcept { return a.raw_ == b.raw_; }

  std::string to_string() const { return is_star() ? std::string("*") : std::to_string(raw_); }

 private:
  Int raw_ = 0;
};

inline constexpr ExtInt kStar = ExtInt::star();

using ExtVector = std::vector<ExtInt>;
using ExtSpan = std::span<const ExtInt>;

/// Row-major matrix over Z ∪ {★}. Vectors are 1 x n.
struct ExtMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ExtVector data;

  ExtMatrix() = default;
  ExtMatrix(std::size_t r, std::size_t c, ExtInt fill = ExtInt(0)) : rows(r), cols(c), data(r * c, fill) {}
  ExtMatrix(std::size_t r, std::size_t c, ExtVector values) : rows(r), cols(c), data(std::move(values)) {
    if (data.size() != r * c) throw DimensionError("ExtMatrix entry count does not match shape");
  }

  static ExtMatrix row(ExtVector v) {
    const std::size_t n = v.size();
    return ExtMatrix(1, n, std::move(v));
  }

  ExtInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  ExtInt at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  ExtSpan row_span(std::size_t r) const { return ExtSpan(data).subspan(r * cols, cols); }

  ExtMatrix transposed() const {
    ExtMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const ExtMatrix&, const ExtMatrix&) = default;
};

/// Throws BoundError when any integer entry has magnitude above `bound`.
void check_bound(ExtSpan values, Int bound);

/// Number of non-★ entries.
std::size_t count_relevant(ExtSpan values);

}  // namespace hamred
