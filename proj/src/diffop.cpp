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


#include "nilpac/diffop.hpp"

#include <algorithm>

#include "nilpac/sampling.hpp"

namespace nilpac {

RatFun DiffOp::operator()(const RatFun& x) const {
  RatFun acc(0), dx = x;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) dx = dx.derive();
    acc += c_[k] * dx;
  }
  return acc;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return DiffOp(std::move(c));
}

DiffOp DiffOp::operator-() const {
  std::vector<RatFun> c = c_;
  for (auto& x : c) x = -x;
  return DiffOp(std::move(c));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

// D^k (b D^m) = sum_r C(k, r) b^(r) D^(k - r + m)
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return DiffOp();
  std::vector<RatFun> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t m = 0; m < b.c_.size(); ++m) {
    RatFun deriv = b.c_[m];
    for (std::size_t r = 0; r < a.c_.size(); ++r) {
      // sum over k >= r of a_k C(k, r) b_m^(r) D^(k - r + m)
      for (std::size_t k = r; k < a.c_.size(); ++k) {
        mpz_class ck;
        mpz_bin_uiui(ck.get_mpz_t(), k, r);
        out[k - r + m] += a.c_[k] * RatFun(Rational(ck, mpz_class(1))) * deriv;
      }
      deriv = deriv.derive();
    }
  }
  return DiffOp(std::move(out));
}

std::string DiffOp::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string ct = c_[k].str();
    const std::string dk = k == 1 ? "D" : "D^" + std::to_string(k);
    if (!s.empty()) s += " + ";
    if (k == 0)
      s += ct;
    else if (ct == "1")
      s += dk;
    else if (ct == "-1")
      s += "-" + dk;
    else
      s += (ct.find(' ') != std::string::npos ? "(" + ct + ")" : ct) + "*" + dk;
  }
  return s;
}

AdditiveMap AdditiveMap::identity(int n) {
  AdditiveMap m(n);
  for (int i = 0; i < n; ++i) m(i, i) = DiffOp(1);
  return m;
}

AdditiveMap AdditiveMap::from_linear(const Mat<RatFun>& a) {
  if (a.rows() != a.cols()) throw DomainError("AdditiveMap needs a square matrix");
  AdditiveMap m(static_cast<int>(a.rows()));
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) m(i, j) = DiffOp(a(i, j));
  return m;
}

Vec<RatFun> AdditiveMap::apply(const Vec<RatFun>& x) const {
  if (x.size() != n_) throw DomainError("AdditiveMap applied to a vector of the wrong length");
  Vec<RatFun> out(n_);
  for (int i = 0; i < n_; ++i) {
    RatFun acc(0);
    for (int j = 0; j < n_; ++j) {
      const DiffOp& op = (*this)(i, j);
      if (!op.is_zero()) acc += op(x(j));
    }
    out(i) = acc;
  }
  return out;
}

bool AdditiveMap::is_linear() const {
  for (const auto& op : ops_)
    if (!op.is_linear()) return false;
  return true;
}

Mat<RatFun> AdditiveMap::linear_part() const {
  if (!is_linear()) throw DomainError("AdditiveMap has a differential entry");
  Mat<RatFun> m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).coeff(0);
  return m;
}

AdditiveMap operator*(const AdditiveMap& a, const AdditiveMap& b) {
  if (a.n_ != b.n_) throw DomainError("AdditiveMap size mismatch");
  AdditiveMap r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      DiffOp acc;
      for (int k = 0; k < a.n_; ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

AdditiveMap operator+(const AdditiveMap& a, const AdditiveMap& b) {
  if (a.n_ != b.n_) throw DomainError("AdditiveMap size mismatch");
  AdditiveMap r(a.n_);
  for (std::size_t k = 0; k < a.ops_.size(); ++k) r.ops_[k] = a.ops_[k] + b.ops_[k];
  return r;
}

AdditiveMap operator-(const AdditiveMap& a, const AdditiveMap& b) {
  if (a.n_ != b.n_) throw DomainError("AdditiveMap size mismatch");
  AdditiveMap r(a.n_);
  for (std::size_t k = 0; k < a.ops_.size(); ++k) r.ops_[k] = a.ops_[k] - b.ops_[k];
  return r;
}

std::vector<std::vector<std::string>> AdditiveMap::entry_text() const {
  std::vector<std::vector<std::string>> rows(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i].push_back((*this)(i, j).str());
  return rows;
}

bool preserves_brackets(const TwoStepAlgebra<RatFun>& a, const AdditiveMap& f, int trials, std::uint64_t seed) {
  if (f.size() != a.dim()) throw DomainError("map and algebra dimensions differ");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vec<RatFun> x = random_vector<RatFun>(rng, a.dim(), 5), y = random_vector<RatFun>(rng, a.dim(), 5);
    if (!(f.apply(a.bracket(x, y)) == a.bracket(f.apply(x), f.apply(y)))) return false;
  }
  return true;
}

}  // namespace nilpac
