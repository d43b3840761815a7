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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hamred {

using Int = std::int64_t;
using Wide = __int128;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value left the declared bound or the arithmetic width.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A reduction could not be built or applied; usually a catalog bug or a
/// domain the reduction does not cover.
class ReductionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// Checked arithmetic. Every score and reduction computation goes through
// these so that an undersized bound surfaces as a BoundError instead of
// wrapping silently.

template <typename T>
inline T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundError("integer overflow in addition");
  return r;
}

template <typename T>
inline T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw BoundError("integer overflow in subtraction");
  return r;
}

template <typename T>
inline T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundError("integer overflow in multiplication");
  return r;
}

template <typename T>
inline T checked_pow(T base, unsigned exponent) {
  T r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

inline Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw BoundError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b);

std::string to_string(Wide v);

/// floor(log2(v)) for v >= 1.
inline unsigned floor_log2(std::uint64_t v) { return 63u - static_cast<unsigned>(__builtin_clzll(v)); }

/// ceil(log2(v)) for v >= 1.
inline unsigned ceil_log2(std::uint64_t v) { return v <= 1 ? 0u : floor_log2(v - 1) + 1u; }

/// Floor division for signed operands (C++ truncates toward zero).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace hamred
