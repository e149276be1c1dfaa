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

#include "nilpac/ratfun.hpp"

#include <cctype>
#include <ostream>

namespace nilpac {

RatFun::RatFun(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  const QPoly g = QPoly::gcd(num, den);
  num_ = QPoly::divmod(num, g).first;
  den_ = QPoly::divmod(den, g).first;
  const Rational lead = den_.lead();
  if (lead != Rational(1)) {
    const QPoly scale(lead.inverse());
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(t)");
  return RatFun(den_, num_);
}

RatFun RatFun::derive() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFun::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw DomainError("evaluation at a pole of " + str());
  return num_(x) / d;
}

std::string RatFun::str() const {
  if (den_ == QPoly(1)) return to_text(num_);
  return "(" + to_text(num_) + ")/(" + to_text(den_) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "(a)" or "(a)/(b)"; returns false when text does not start with '('.
bool split_parenthesized(std::string_view s, std::string_view& num, std::string_view& den) {
  if (s.empty() || s.front() != '(') return false;
  const auto close = s.find(')');
  if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
  num = s.substr(1, close - 1);
  auto rest = trim(s.substr(close + 1));
  if (rest.empty()) {
    den = "1";
    return true;
  }
  if (rest.front() != '/') throw ParseError("expected '/' in '" + std::string(s) + "'");
  rest = trim(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("denominator must be parenthesized in '" + std::string(s) + "'");
  den = rest.substr(1, rest.size() - 2);
  return true;
}

}  // namespace

RatFun RatFun::parse(std::string_view text) {
  const auto s = trim(text);
  std::string_view num, den;
  if (split_parenthesized(s, num, den)) {
    const QPoly d = parse_qpoly(den);
    if (d.is_zero()) throw DomainError("zero denominator in '" + std::string(s) + "'");
    return RatFun(parse_qpoly(num), d);
  }
  return RatFun(parse_qpoly(s));
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

}  // namespace nilpac
