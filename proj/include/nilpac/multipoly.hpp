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

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nilpac/error.hpp"
#include "nilpac/rational.hpp"

namespace nilpac {

/// Sparse multivariate polynomial. Exponent vectors have trailing zeros
/// removed, so the variable count is implicit and x0 + 0 equals x0 in any
/// number of variables. No zero coefficient is ever stored; std::map gives
/// the canonical term order.
template <class F>
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, F>;

  MultiPoly() = default;
  MultiPoly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!detail::zero(c)) t_.emplace(Exponent{}, c);
  }
  MultiPoly(int c) : MultiPoly(F(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(int i) { return monomial(F(1), unit_exponent(i)); }
  static MultiPoly monomial(const F& c, Exponent e) {
    MultiPoly r;
    normalize(e);
    if (!detail::zero(c)) r.t_.emplace(std::move(e), c);
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  /// Largest index of a variable that occurs, plus one.
  int nvars() const {
    int n = 0;
    for (const auto& [e, c] : t_) n = std::max(n, static_cast<int>(e.size()));
    return n;
  }
  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }
  F coeff(Exponent e) const {
    normalize(e);
    auto it = t_.find(e);
    return it == t_.end() ? F(0) : it->second;
  }

  /// Substitutes point[i] for variable i; missing coordinates count as 0.
  F operator()(const std::vector<F>& point) const {
    F acc(0);
    for (const auto& [e, c] : t_) {
      F term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        const F x = i < point.size() ? point[i] : F(0);
        for (int k = 0; k < e[i]; ++k) term *= x;
      }
      acc += term;
    }
    return acc;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  /// Exact division by a nonzero constant.
  friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
    if (b.total_degree() != 0) throw DomainError("MultiPoly division by a non-constant");
    const F inv = F(1) / b.t_.begin()->second;
    MultiPoly r = a;
    for (auto& [e, c] : r.t_) c *= inv;
    return r;
  }
  MultiPoly& operator/=(const MultiPoly& o) { return *this = *this / o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

  /// e.g. "z1^2 + z2^2", variables named prefix1, prefix2, ...
  std::string str(const std::string& prefix = "x") const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::ostringstream cs;
      cs << c;
      std::string ctext = cs.str();
      bool neg = !ctext.empty() && ctext[0] == '-';
      if (neg) ctext.erase(0, 1);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += prefix + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        os << ctext;
      else if (ctext == "1")
        os << mono;
      else
        os << ctext << "*" << mono;
    }
    return os.str();
  }

 private:
  static Exponent unit_exponent(int i) {
    Exponent e(i + 1, 0);
    e[i] = 1;
    return e;
  }
  static void normalize(Exponent& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  void add_term(Exponent e, const F& c) {
    normalize(e);
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::zero(it->second)) t_.erase(it);
    } else if (detail::zero(c)) {
      t_.erase(it);
    }
  }

  Terms t_;
};

template <class F>
bool is_zero(const MultiPoly<F>& p) {
  return p.is_zero();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const MultiPoly<F>& p) {
  return os << p.str();
}

using QMultiPoly = MultiPoly<Rational>;

}  // namespace nilpac
