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

#include <ostream>

#include "nilpac/error.hpp"

namespace nilpac {

/// Dual number a + b*eps over F with eps^2 = 0.
template <class F>
struct Dual {
  F re{0};
  F eps{0};

  Dual() = default;
  Dual(const F& a) : re(a), eps(0) {}  // NOLINT(google-explicit-constructor)
  Dual(int a) : re(a), eps(0) {}       // NOLINT(google-explicit-constructor)
  Dual(const F& a, const F& b) : re(a), eps(b) {}

  static Dual epsilon() { return Dual(F(0), F(1)); }

  Dual operator-() const { return {-re, -eps}; }
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.re + y.re, x.eps + y.eps}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.re - y.re, x.eps - y.eps}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.re * y.re, x.re * y.eps + x.eps * y.re};
  }
  /// Requires a unit divisor (nonzero real part).
  friend Dual operator/(const Dual& x, const Dual& y) {
    if (is_zero(y.re)) throw DomainError("dual division by a non-unit");
    const F inv = F(1) / y.re;
    return {x.re * inv, (x.eps * y.re - x.re * y.eps) * inv * inv};
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend bool operator==(const Dual& x, const Dual& y) { return x.re == y.re && x.eps == y.eps; }
  friend std::ostream& operator<<(std::ostream& os, const Dual& x) {
    return os << x.re << " + (" << x.eps << ")*eps";
  }
};

template <class F>
bool is_zero(const Dual<F>& x) {
  return is_zero(x.re) && is_zero(x.eps);
}

}  // namespace nilpac
