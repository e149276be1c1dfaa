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

#include <iosfwd>
#include <string>
#include <string_view>

#include "nilpac/rational.hpp"
#include "nilpac/unipoly.hpp"

namespace nilpac {

/// Element of the rational function field Q(t): num/den with gcd 1 and a
/// monic denominator.
///
/// Q(t) carries the derivation d/dt, which is additive and Q-linear but
/// not Q(t)-linear. It stands in for the discontinuous additive maps and
/// derivations of R that have no computable representative.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(int c) : num_(Rational(c)), den_(1) {}           // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}         // NOLINT(google-explicit-constructor)
  RatFun(const QPoly& p) : num_(p), den_(1) {}            // NOLINT(google-explicit-constructor)
  /// Throws DomainError for a zero denominator.
  RatFun(const QPoly& num, const QPoly& den);

  static RatFun t() { return RatFun(QPoly::x()); }

  /// "(num)/(den)" in c*t^k notation; just "num" when den = 1.
  std::string str() const;
  /// Accepts "(p)/(q)", "(p)", or a bare polynomial.
  static RatFun parse(std::string_view text);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  /// Quotient rule, reduced.
  RatFun derive() const;
  /// Evaluates at a rational point; throws DomainError at a pole.
  Rational operator()(const Rational& x) const;

  RatFun inverse() const;

  RatFun operator-() const { return RatFun(-num_, den_, Canonical{}); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFun& f);

 private:
  struct Canonical {};
  RatFun(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

}  // namespace nilpac
