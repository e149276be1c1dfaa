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
#include <cstdint>

#include "nilpac/analysis.hpp"
#include "nilpac/diffop.hpp"
#include "nilpac/quaternion.hpp"

namespace nilpac {

/// (f - id) maps N into the center.
template <class F>
bool is_central(const TwoStepAlgebra<F>& a, const Mat<F>& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) throw DomainError("is_central: size mismatch");
  const auto z = center(a);
  const Mat<F> d = f - identity<F>(a.dim());
  for (int s = 0; s < a.dim(); ++s)
    if (!z.contains(Vec<F>(d.col(s)))) return false;
  return true;
}

template <class F>
bool is_central_automorphism(const TwoStepAlgebra<F>& a, const Mat<F>& f) {
  return is_central(a, f) && is_automorphism(a, f);
}

/// id + mu for mu: N -> Z given as a p x dim matrix. Rejects mu that is
/// nonzero on the commutator ideal and mu for which id + mu is singular.
template <class F>
Mat<F> make_central(const TwoStepAlgebra<F>& a, const Mat<F>& mu) {
  const int n = a.dim(), p = a.p();
  if (mu.rows() != p || mu.cols() != n) throw DomainError("central map must be p x dim");
  const Mat<F> on_comm = mu * commutator_subspace(a).basis();
  if (!is_zero(on_comm)) throw DomainError("central map must vanish on the commutator ideal");
  Mat<F> f = identity<F>(n);
  f.bottomRows(p) += mu;
  if (detail::zero(determinant(f))) throw DomainError("id + mu is not invertible");
  if (!is_central_automorphism(a, f)) throw InvariantViolation("id + mu is not a central automorphism");
  return f;
}

/// lambda on V and lambda^2 on Z.
template <class F>
Mat<F> dilation(const TwoStepAlgebra<F>& a, const F& lambda) {
  if (detail::zero(lambda)) throw DomainError("dilation factor must be nonzero");
  Mat<F> d = Mat<F>::Zero(a.dim(), a.dim());
  for (int i = 0; i < a.q(); ++i) d(i, i) = lambda;
  for (int k = 0; k < a.p(); ++k) d(a.q() + k, a.q() + k) = lambda * lambda;
  return d;
}

/// f = mu o fbar = fbar_k o mu_k with mu, mu_k central and fbar = fbar_k
/// preserving V. unique is set when Z is the commutator ideal, where the
/// V-preserving factor is determined by f.
template <class F>
struct SemidirectDecomposition {
  Mat<F> mu, fbar;      // H o K order
  Mat<F> mu_k, fbar_k;  // K o H order
  bool unique = false;
};

template <class F>
SemidirectDecomposition<F> semidirect_decompose(const TwoStepAlgebra<F>& a, const Mat<F>& f) {
  if (!is_automorphism(a, f)) throw DomainError("semidirect_decompose needs an automorphism");
  const int q = a.q(), p = a.p(), n = a.dim();
  if (!is_zero(Mat<F>(f.topRightCorner(q, p)))) throw DomainError("automorphism does not preserve Z");
  const Mat<F> fvv = f.topLeftCorner(q, q), fzv = f.bottomLeftCorner(p, q), fzz = f.bottomRightCorner(p, p);
  if (detail::zero(determinant(fzz))) throw DomainError("automorphism is singular on Z");

  SemidirectDecomposition<F> out;
  out.fbar = Mat<F>::Zero(n, n);
  out.fbar.topLeftCorner(q, q) = fvv;
  out.fbar.bottomRightCorner(p, p) = fzz;
  out.fbar_k = out.fbar;
  out.mu = identity<F>(n);
  out.mu.bottomLeftCorner(p, q) = fzv * inverse(fvv);
  out.mu_k = identity<F>(n);
  out.mu_k.bottomLeftCorner(p, q) = inverse(fzz) * fzv;

  if (!(Mat<F>(out.mu * out.fbar) == f) || !(Mat<F>(out.fbar_k * out.mu_k) == f))
    throw InvariantViolation("semidirect factors do not recompose to f");
  if (!is_central_automorphism(a, out.mu) || !is_central_automorphism(a, out.mu_k))
    throw InvariantViolation("central factor is not a central automorphism");
  if (!is_automorphism(a, out.fbar)) throw InvariantViolation("V-preserving factor is not an automorphism");
  out.unique = commutator_ideal(a).equals_declared;
  return out;
}

/// An automorphism of N6 over Q(t) that is additive but not linear:
/// the identity plus D in the (Z2, Z1) and (X3, X2) entries and -D in the
/// (X4, X1) entry. residual = f(t X1) - t f(X1), which is -X4.
struct N6Witness {
  TwoStepAlgebra<RatFun> algebra;
  AdditiveMap f, f_inverse;
  Vec<RatFun> residual;
};
N6Witness n6_witness();

/// Complex conjugation on heis3C in the basis X, iX, Y, iY, Z, iZ.
QMat conjugation_heis3c();

/// x -> x u on each quaternionic coordinate of quat(n), identity on Z.
/// Requires |u| = 1; commutes with every j(Z).
QMat sp_right_mult(int n, const Quaternion<Rational>& u);

/// V-preserving automorphism g of quat(n) with g(X1) = v for a nonzero
/// V vector v (length 4n). g acts as a quaternionic similitude with
/// multiplier |v|^2 on V and as |v|^2 on Z.
QMat quat_send(int n, const QVec& v);

/// Automorphism of heis(n) that is symplectic on V (identity on Z) and
/// sends X1 to the nonzero V vector v (length 2n).
QMat symplectic_send(int n, const QVec& v);

/// a^2 + b^2 + c^2 + d^2 = m for m >= 0, by random descent to a prime
/// that is 1 mod 4. Deterministic for a fixed m.
std::array<mpz_class, 4> four_squares(const mpz_class& m);

}  // namespace nilpac
