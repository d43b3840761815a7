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

#include "hamred/polynomial.hpp"

#include <algorithm>

#include "hamred/rational.hpp"

namespace hamred {

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw ReductionError("rational with zero denominator");
  if (den < 0) {
    num = checked_sub<Wide>(0, num);
    den = checked_sub<Wide>(0, den);
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Wide Rational::to_integer() const {
  if (den_ != 1) throw ReductionError("non-integer aggregate " + to_string());
  return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
  Wide g = wide_gcd(a.den_, b.den_);
  Wide lhs = checked_mul(a.num_, b.den_ / g);
  Wide rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g));
}

Rational operator*(const Rational& a, const Rational& b) {
  Wide g1 = wide_gcd(a.num_, b.den_);
  Wide g2 = wide_gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ReductionError("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return hamred::to_string(num_);
  return hamred::to_string(num_) + "/" + hamred::to_string(den_);
}

Wide eval_poly1(const Poly1& p, Wide t) {
  Wide acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = checked_add(checked_mul(acc, t), p[i]);
  return acc;
}

Wide binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (unsigned i = 1; i <= k; ++i) r = checked_mul<Wide>(r, n - k + i) / i;
  return r;
}

Wide factorial(unsigned n) {
  Wide r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul<Wide>(r, i);
  return r;
}

Poly2 Poly2::constant(Wide c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(Wide c, unsigned a, unsigned b) {
  Poly2 p(a, b);
  p.set(a, b, c);
  return p;
}

void Poly2::set(unsigned a, unsigned b, Wide v) {
  if (a > dx_ || b > dy_) {
    Poly2 grown(std::max(a, dx_), std::max(b, dy_));
    for (unsigned i = 0; i <= dx_; ++i)
      for (unsigned j = 0; j <= dy_; ++j) grown.c_[i * (grown.dy_ + 1) + j] = coef(i, j);
    *this = std::move(grown);
  }
  c_[a * (dy_ + 1) + b] = v;
}

unsigned Poly2::total_degree() const {
  unsigned d = 0;
  for (unsigned a = 0; a <= dx_; ++a)
    for (unsigned b = 0; b <= dy_; ++b)
      if (coef(a, b) != 0) d = std::max(d, a + b);
  return d;
}

bool Poly2::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Wide v) { return v == 0; });
}

Wide Poly2::eval(Wide x, Wide y) const {
  Wide acc = 0;
  for (unsigned a = dx_ + 1; a-- > 0;) {
    Wide row = 0;
    for (unsigned b = dy_ + 1; b-- > 0;) row = checked_add(checked_mul(row, y), coef(a, b));
    acc = checked_add(checked_mul(acc, x), row);
  }
  return acc;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r(std::max(dx_, o.dx_), std::max(dy_, o.dy_));
  for (unsigned a = 0; a <= r.dx_; ++a)
    for (unsigned b = 0; b <= r.dy_; ++b) r.c_[a * (r.dy_ + 1) + b] = checked_add(coef(a, b), o.coef(a, b));
  return r.trimmed();
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o.scaled(-1); }

Poly2 Poly2::scaled(Wide k) const {
  Poly2 r = *this;
  for (Wide& v : r.c_) v = checked_mul(v, k);
  return r.trimmed();
}

Poly2 Poly2::divided(Wide k) const {
  Poly2 r = *this;
  for (Wide& v : r.c_) {
    if (v % k != 0) throw ReductionError("inexact polynomial division");
    v /= k;
  }
  return r;
}

Wide Poly2::content() const {
  Wide g = 0;
  for (Wide v : c_) g = wide_gcd(g, v);
  return g;
}

namespace {

// Coefficients of (s * t + o)^k in t.
Poly1 affine_power(Wide s, Wide o, unsigned k) {
  Poly1 r(k + 1, 0);
  for (unsigned i = 0; i <= k; ++i)
    r[i] = checked_mul(binomial(k, i), checked_mul(checked_pow(s, i), checked_pow(o, k - i)));
  return r;
}

}  // namespace

Poly2 Poly2::affine(Wide ax, Wide bx, Wide ay, Wide by) const {
  Poly2 r(dx_, dy_);
  for (unsigned a = 0; a <= dx_; ++a) {
    Poly1 px = affine_power(ax, bx, a);
    for (unsigned b = 0; b <= dy_; ++b) {
      Wide c = coef(a, b);
      if (c == 0) continue;
      Poly1 py = affine_power(ay, by, b);
      for (unsigned i = 0; i <= a; ++i) {
        if (px[i] == 0) continue;
        Wide ci = checked_mul(c, px[i]);
        for (unsigned j = 0; j <= b; ++j) r.add_to(i, j, checked_mul(ci, py[j]));
      }
    }
  }
  return r.trimmed();
}

Poly1 Poly2::diagonal() const {
  Poly1 r(dx_ + dy_ + 1, 0);
  for (unsigned a = 0; a <= dx_; ++a)
    for (unsigned b = 0; b <= dy_; ++b) r[a + b] = checked_add(r[a + b], coef(a, b));
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

Poly2 Poly2::trimmed() const {
  unsigned nx = 0;
  unsigned ny = 0;
  for (unsigned a = 0; a <= dx_; ++a)
    for (unsigned b = 0; b <= dy_; ++b)
      if (coef(a, b) != 0) {
        nx = std::max(nx, a);
        ny = std::max(ny, b);
      }
  if (nx == dx_ && ny == dy_) return *this;
  Poly2 r(nx, ny);
  for (unsigned a = 0; a <= nx; ++a)
    for (unsigned b = 0; b <= ny; ++b) r.c_[a * (ny + 1) + b] = coef(a, b);
  return r;
}

Wide Poly2::magnitude_bound(Wide X, Wide Y) const {
  Wide acc = 0;
  for (unsigned a = 0; a <= dx_; ++a)
    for (unsigned b = 0; b <= dy_; ++b) {
      Wide c = coef(a, b);
      if (c == 0) continue;
      acc = checked_add(acc, checked_mul(wide_abs(c), checked_mul(checked_pow(X, a), checked_pow(Y, b))));
    }
  return acc;
}

bool operator==(const Poly2& a, const Poly2& b) {
  const unsigned dx = std::max(a.dx_, b.dx_);
  const unsigned dy = std::max(a.dy_, b.dy_);
  for (unsigned i = 0; i <= dx; ++i)
    for (unsigned j = 0; j <= dy; ++j)
      if (a.coef(i, j) != b.coef(i, j)) return false;
  return true;
}

std::string Poly2::to_string() const {
  std::string out;
  for (unsigned a = 0; a <= dx_; ++a)
    for (unsigned b = 0; b <= dy_; ++b) {
      Wide c = coef(a, b);
      if (c == 0) continue;
      if (!out.empty()) out += "+";
      out += hamred::to_string(c) + "*" + std::to_string(a) + "*" + std::to_string(b);
    }
  return out.empty() ? std::string("0*0*0") : out;
}

}  // namespace hamred
