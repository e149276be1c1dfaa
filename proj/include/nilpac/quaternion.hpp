/*
 * Copyright 2026 The nilpac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <ostream>

#include "nilpac/error.hpp"

namespace nilpac {

/// a + b i + c j + d k over F, Hamilton product.
template <class F>
struct Quaternion {
  F a{0}, b{0}, c{0}, d{0};

  Quaternion() = default;
  Quaternion(const F& a_) : a(a_) {}  // NOLINT(google-explicit-constructor)
  Quaternion(int a_) : a(a_) {}       // NOLINT(google-explicit-constructor)
  Quaternion(const F& a_, const F& b_, const F& c_, const F& d_) : a(a_), b(b_), c(c_), d(d_) {}

  static Quaternion i() { return {F(0), F(1), F(0), F(0)}; }
  static Quaternion j() { return {F(0), F(0), F(1), F(0)}; }
  static Quaternion k() { return {F(0), F(0), F(0), F(1)}; }

  std::array<F, 4> components() const { return {a, b, c, d}; }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  F norm2() const { return a * a + b * b + c * c + d * d; }
  Quaternion inverse() const {
    const F n = norm2();
    if (is_zero(n)) throw DomainError("inverse of the zero quaternion");
    const F inv = F(1) / n;
    return {a * inv, -b * inv, -c * inv, -d * inv};
  }

  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  /// Right division x * y^-1.
  friend Quaternion operator/(const Quaternion& x, const Quaternion& y) { return x * y.inverse(); }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.a << ", " << q.b << ", " << q.c << ", " << q.d << ")";
  }
};

template <class F>
bool is_zero(const Quaternion<F>& q) {
  return is_zero(q.a) && is_zero(q.b) && is_zero(q.c) && is_zero(q.d);
}

}  // namespace nilpac
