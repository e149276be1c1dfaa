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
#include <vector>

#include "nilpac/algebra.hpp"
#include "nilpac/ratfun.hpp"
#include "nilpac/scalar.hpp"

namespace nilpac {

/// Differential operator sum_k c_k D^k on Q(t), D = d/dt. Every such
/// operator is additive; it is Q(t)-linear exactly when it has order 0.
class DiffOp {
 public:
  DiffOp() = default;
  DiffOp(const RatFun& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  DiffOp(int c) : DiffOp(RatFun(c)) {}          // NOLINT(google-explicit-constructor)
  explicit DiffOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DiffOp d() { return DiffOp(std::vector<RatFun>{RatFun(0), RatFun(1)}); }

  /// -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_linear() const { return order() <= 0; }
  RatFun coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : RatFun(0); }

  RatFun operator()(const RatFun& x) const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  DiffOp operator-() const;
  /// Composition a o b, using D c = c D + c'.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

  /// "c0 + c1*D + c2*D^2" with zero terms omitted, unit coefficients
  /// dropped and compound ones parenthesized; "0" for the zero operator.
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<RatFun> c_;
};

/// Additive endomorphism of Q(t)^n given entrywise by differential
/// operators: out_i = sum_j op(i, j)(x_j).
class AdditiveMap {
 public:
  AdditiveMap() = default;
  explicit AdditiveMap(int n) : n_(n), ops_(static_cast<std::size_t>(n) * n) {}

  static AdditiveMap identity(int n);
  static AdditiveMap from_linear(const Mat<RatFun>& m);

  int size() const { return n_; }
  DiffOp& operator()(int i, int j) { return ops_.at(index(i, j)); }
  const DiffOp& operator()(int i, int j) const { return ops_.at(index(i, j)); }

  Vec<RatFun> apply(const Vec<RatFun>& x) const;
  bool is_linear() const;
  /// Coefficient matrix; throws DomainError unless is_linear().
  Mat<RatFun> linear_part() const;

  friend AdditiveMap operator*(const AdditiveMap& a, const AdditiveMap& b);
  friend AdditiveMap operator+(const AdditiveMap& a, const AdditiveMap& b);
  friend AdditiveMap operator-(const AdditiveMap& a, const AdditiveMap& b);
  friend bool operator==(const AdditiveMap& a, const AdditiveMap& b) { return a.n_ == b.n_ && a.ops_ == b.ops_; }

  /// Rows of DiffOp::str() entries.
  std::vector<std::vector<std::string>> entry_text() const;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw DomainError("AdditiveMap index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_ = 0;
  std::vector<DiffOp> ops_;
};

/// Same structure constants, read in a larger field.
template <class G, class F>
TwoStepAlgebra<G> cast_algebra(const TwoStepAlgebra<F>& a) {
  std::vector<Mat<G>> c;
  for (const auto& m : a.structure()) c.push_back(m.unaryExpr([](const F& x) { return G(x); }));
  return TwoStepAlgebra<G>(a.q(), a.p(), std::move(c), a.label());
}

/// Randomized check that an additive map preserves brackets:
/// f[x, y] = [f x, f y] on sampled x, y in Q(t)^n.
bool preserves_brackets(const TwoStepAlgebra<RatFun>& a, const AdditiveMap& f, int trials, std::uint64_t seed);

}  // namespace nilpac
