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

#include "nilpac/unipoly.hpp"

#include <cctype>

namespace nilpac {

std::string to_text(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!unit) out += mag.str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

std::string strip(std::string_view s) {
  std::string r;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
  return r;
}

}  // namespace

QPoly parse_qpoly(std::string_view text, std::string_view var) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  QPoly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
    pos = end;

    Rational coeff(1);
    int degree = 0;
    const auto var_pos = term.find(var);
    if (var_pos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      if (var_pos > 0) {
        if (term[var_pos - 1] != '*')
          throw ParseError("expected '*' before variable in '" + term + "'");
        coeff = Rational::parse(term.substr(0, var_pos - 1));
      }
      const std::string rest = term.substr(var_pos + var.size());
      if (rest.empty()) {
        degree = 1;
      } else if (rest[0] == '^') {
        const std::string digits = rest.substr(1);
        if (digits.empty() || digits.size() > 6)
          throw ParseError("bad exponent in '" + term + "'");
        for (char ch : digits)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad exponent in '" + term + "'");
        degree = std::stoi(digits);
      } else {
        throw ParseError("unexpected text after variable in '" + term + "'");
      }
    }
    result += QPoly::monomial(coeff * Rational(sign), degree);
  }
  return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest degree first, trimmed

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive_integer(const QPoly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.num() * (lcm_den / c.den()));
  trim(z);
  return z;
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) c /= g;
}

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Remainder of a by b, scaled by a positive power of |lc(b)|.
ZPoly signed_prem(ZPoly a, const ZPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const mpz_class lb = b.back();
  int steps = 0;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    ++steps;
  }
  // a now carries the factor lb^steps
  if (lb < 0 && steps % 2 == 1)
    for (auto& c : a) c = -c;
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_real_roots(const QPoly& p) {
  if (p.is_zero()) throw DomainError("sturm_real_roots: zero polynomial");
  std::vector<ZPoly> seq;
  seq.push_back(primitive_integer(p));
  make_primitive(seq.back());
  ZPoly d = derivative(seq.back());
  if (!d.empty()) {
    make_primitive(d);
    seq.push_back(d);
    while (true) {
      ZPoly r = signed_prem(seq[seq.size() - 2], seq.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      make_primitive(r);
      seq.push_back(r);
    }
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : seq) {
    const int lead = sgn(s.back());
    const int deg = static_cast<int>(s.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace nilpac
