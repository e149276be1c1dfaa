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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilpac/error.hpp"
#include "nilpac/rational.hpp"

namespace nilpac {

/// Dense univariate polynomial over a field, lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::zero(c)) c_.push_back(c);
  }
  UniPoly(int c) : UniPoly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const F& c, int k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  F coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : F(0); }
  const std::vector<F>& coeffs() const { return c_; }

  F operator()(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<int>(k));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const F inv = F(1) / lead();
    return *this * UniPoly(inv);
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  /// Euclidean division; throws DomainError for a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    UniPoly quot, rem = a;
    const F inv_lead = F(1) / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      const F factor = rem.lead() * inv_lead;
      const UniPoly term = monomial(factor, shift);
      quot += term;
      rem -= term * b;
    }
    return {quot, rem};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const UniPoly<F>& p) {
  return p.is_zero();
}

using QPoly = UniPoly<Rational>;

/// Sparse "c*t^k" sum notation, highest degree first, e.g. "3*t^2 - 1/2*t + 1".
std::string to_text(const QPoly& p, std::string_view var = "t");
/// Inverse of to_text; accepts any term order and repeated degrees.
QPoly parse_qpoly(std::string_view text, std::string_view var = "t");

/// Number of distinct real roots by a Sturm sequence over the integers
/// with sign-corrected pseudo-remainders. Throws DomainError for p = 0.
int sturm_real_roots(const QPoly& p);

}  // namespace nilpac
