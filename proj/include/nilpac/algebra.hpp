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
#include <utility>
#include <vector>

#include "nilpac/error.hpp"
#include "nilpac/linalg.hpp"

namespace nilpac {

/// A 2-step nilpotent Lie algebra N = V + Z given by structure constants
/// [e_i, e_j] = sum_k c^k_ij z_k on V, with Z central. Stored as p
/// skew-symmetric q x q matrices C_k with C_k(i, j) = c^k_ij, so
/// antisymmetry is structural and Jacobi holds trivially.
///
/// Elements are coordinate vectors of length q + p, V coordinates first.
template <class F>
class TwoStepAlgebra {
 public:
  using Scalar = F;

  TwoStepAlgebra() = default;
  TwoStepAlgebra(int q, int p, std::vector<Mat<F>> c, std::string label = {})
      : q_(q), p_(p), c_(std::move(c)), label_(std::move(label)) {
    if (q < 0 || p < 0) throw DomainError("negative algebra dimension");
    if (static_cast<int>(c_.size()) != p) throw DomainError("expected one bracket matrix per Z direction");
    for (const auto& m : c_) {
      if (m.rows() != q || m.cols() != q) throw DomainError("bracket matrix has the wrong size");
      if (!is_skew(m)) throw InvariantViolation("bracket matrix is not antisymmetric");
    }
  }

  /// All brackets zero.
  static TwoStepAlgebra zero(int q, int p, std::string label = {}) {
    return TwoStepAlgebra(q, p, std::vector<Mat<F>>(p, Mat<F>::Zero(q, q)), std::move(label));
  }
  static TwoStepAlgebra abelian(int k) { return zero(k, 0, "R" + std::to_string(k)); }

  int q() const { return q_; }
  int p() const { return p_; }
  int dim() const { return q_ + p_; }
  const std::string& label() const { return label_; }
  TwoStepAlgebra with_label(std::string l) const {
    TwoStepAlgebra a = *this;
    a.label_ = std::move(l);
    return a;
  }

  const Mat<F>& c(int k) const { return c_.at(k); }
  const std::vector<Mat<F>>& structure() const { return c_; }

  /// Sets [e_i, e_j] = sum_k z_k Z_k (0-based, i != j) and the
  /// antisymmetric partner.
  void set_bracket(int i, int j, const Vec<F>& z) {
    if (i == j || i < 0 || j < 0 || i >= q_ || j >= q_) throw DomainError("bad bracket index pair");
    if (z.size() != p_) throw DomainError("bracket vector has the wrong length");
    for (int k = 0; k < p_; ++k) {
      c_[k](i, j) = z(k);
      c_[k](j, i) = -z(k);
    }
  }

  /// Z coordinates of [e_i, e_j] for V basis vectors.
  Vec<F> bracket_basis(int i, int j) const {
    Vec<F> z(p_);
    for (int k = 0; k < p_; ++k) z(k) = c_[k](i, j);
    return z;
  }

  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DomainError("bracket: element dimension mismatch");
    Vec<F> out = Vec<F>::Zero(dim());
    const Vec<F> xv = x.head(q_), yv = y.head(q_);
    for (int k = 0; k < p_; ++k) out(q_ + k) = xv.dot(c_[k] * yv);
    return out;
  }

  Vec<F> basis_vector(int a) const { return unit_vector<F>(dim(), a); }
  Vec<F> element(const Vec<F>& v, const Vec<F>& z) const {
    if (v.size() != q_ || z.size() != p_) throw DomainError("element: coordinate length mismatch");
    Vec<F> e(dim());
    e << v, z;
    return e;
  }

  friend bool operator==(const TwoStepAlgebra& a, const TwoStepAlgebra& b) {
    return a.q_ == b.q_ && a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  int q_ = 0;
  int p_ = 0;
  std::vector<Mat<F>> c_;
  std::string label_;
};

using QAlgebra = TwoStepAlgebra<Rational>;

/// Block structure constants on V_A + V_B and Z_A + Z_B.
template <class F>
TwoStepAlgebra<F> direct_sum(const TwoStepAlgebra<F>& a, const TwoStepAlgebra<F>& b) {
  const int q = a.q() + b.q(), p = a.p() + b.p();
  auto out = TwoStepAlgebra<F>::zero(q, p);
  std::vector<Mat<F>> c(p, Mat<F>::Zero(q, q));
  for (int k = 0; k < a.p(); ++k) c[k].topLeftCorner(a.q(), a.q()) = a.c(k);
  for (int k = 0; k < b.p(); ++k) c[a.p() + k].bottomRightCorner(b.q(), b.q()) = b.c(k);
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return TwoStepAlgebra<F>(q, p, std::move(c), std::move(label));
}

/// Re-expresses A in the basis given by the columns of `basis` (old
/// coordinates), the first `q_new` columns spanning the new V. Throws
/// DomainError unless `basis` is invertible, the new Z directions are
/// central, and every bracket of new V vectors lies in the new Z.
template <class F>
TwoStepAlgebra<F> change_basis(const TwoStepAlgebra<F>& a, const Mat<F>& basis, int q_new) {
  const int n = a.dim();
  if (basis.rows() != n || basis.cols() != n) throw DomainError("change_basis: wrong matrix size");
  if (q_new < 0 || q_new > n) throw DomainError("change_basis: bad V dimension");
  const Mat<F> inv = inverse(basis);
  const int p_new = n - q_new;
  std::vector<Mat<F>> c(p_new, Mat<F>::Zero(q_new, q_new));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const Vec<F> w = inv * a.bracket(basis.col(s), basis.col(t));
      if (s >= q_new || t >= q_new) {
        if (!is_zero(w)) throw DomainError("change_basis: new Z direction is not central");
        continue;
      }
      if (!is_zero(w.head(q_new))) throw DomainError("change_basis: bracket leaves the new Z");
      for (int k = 0; k < p_new; ++k) {
        c[k](s, t) = w(q_new + k);
        c[k](t, s) = -w(q_new + k);
      }
    }
  return TwoStepAlgebra<F>(q_new, p_new, std::move(c), a.label());
}

}  // namespace nilpac
