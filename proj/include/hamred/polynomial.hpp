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

#include <string>
#include <vector>

#include "hamred/common.hpp"

namespace hamred {

/// Univariate integer polynomial, coefficient i multiplies t^i.
using Poly1 = std::vector<Wide>;

Wide eval_poly1(const Poly1& p, Wide t);

/// Dense bivariate integer polynomial. Coefficient (a, b) multiplies x^a y^b.
/// Degrees are small constants everywhere in the library, so a full grid is
/// cheaper than any sparse encoding.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(unsigned deg_x, unsigned deg_y) : dx_(deg_x), dy_(deg_y), c_((deg_x + 1) * (deg_y + 1), 0) {}

  static Poly2 constant(Wide c);
  static Poly2 monomial(Wide c, unsigned a, unsigned b);

  unsigned deg_x() const noexcept { return dx_; }
  unsigned deg_y() const noexcept { return dy_; }
  /// Largest a + b over nonzero coefficients; 0 for the zero polynomial.
  unsigned total_degree() const;
  bool is_zero() const;

  Wide coef(unsigned a, unsigned b) const {
    if (a > dx_ || b > dy_) return 0;
    return c_[a * (dy_ + 1) + b];
  }
  void set(unsigned a, unsigned b, Wide v);
  void add_to(unsigned a, unsigned b, Wide v) { set(a, b, checked_add(coef(a, b), v)); }

  Wide eval(Wide x, Wide y) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 scaled(Wide k) const;
  /// Exact division of every coefficient; throws ReductionError if inexact.
  Poly2 divided(Wide k) const;
  /// gcd of all coefficients (0 for the zero polynomial).
  Wide content() const;

  /// Q(x, y) = P(ax * x + bx, ay * y + by).
  Poly2 affine(Wide ax, Wide bx, Wide ay, Wide by) const;
  /// P(t, t) as a univariate polynomial.
  Poly1 diagonal() const;
  /// Drops trailing zero rows and columns so degrees are tight.
  Poly2 trimmed() const;

  /// Sum of |coef(a,b)| * X^a * Y^b, an upper bound on |P| over |x|<=X, |y|<=Y.
  Wide magnitude_bound(Wide X, Wide Y) const;

  friend bool operator==(const Poly2& a, const Poly2& b);

  std::string to_string() const;

 private:
  unsigned dx_ = 0;
  unsigned dy_ = 0;
  std::vector<Wide> c_ = {0};
};

Wide binomial(unsigned n, unsigned k);
Wide factorial(unsigned n);

}  // namespace hamred
