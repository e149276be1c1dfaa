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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilpac/algebra.hpp"
#include "nilpac/random.hpp"

namespace nilpac {

template <class F>
struct CommutatorIdeal {
  Subspace<F> span;      // inside the p-dimensional Z coordinates
  bool equals_declared;  // span == Z
};

template <class F>
CommutatorIdeal<F> commutator_ideal(const TwoStepAlgebra<F>& a) {
  const int q = a.q(), p = a.p();
  Mat<F> gens(p, q * (q - 1) / 2 > 0 ? q * (q - 1) / 2 : 0);
  int col = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) gens.col(col++) = a.bracket_basis(i, j);
  auto s = Subspace<F>::span(gens);
  const bool full = s.dim() == p;
  return {std::move(s), full};
}

/// V-coordinates of the central directions inside V: common kernel of the
/// bracket matrices.
template <class F>
Subspace<F> central_v(const TwoStepAlgebra<F>& a) {
  const int q = a.q(), p = a.p();
  Mat<F> stacked(p * q, q);
  for (int k = 0; k < p; ++k) stacked.middleRows(k * q, q) = a.c(k);
  if (p == 0) return Subspace<F>::whole(q);
  return rank_kernel(stacked).kernel;
}

/// Z plus the central V directions, in full coordinates.
template <class F>
Subspace<F> center(const TwoStepAlgebra<F>& a) {
  const Subspace<F> kv = central_v(a);
  Mat<F> gens = Mat<F>::Zero(a.dim(), kv.dim() + a.p());
  gens.topLeftCorner(a.q(), kv.dim()) = kv.basis();
  for (int k = 0; k < a.p(); ++k) gens(a.q() + k, kv.dim() + k) = F(1);
  return Subspace<F>::span(gens);
}

/// Commutator ideal in full coordinates.
template <class F>
Subspace<F> commutator_subspace(const TwoStepAlgebra<F>& a) {
  const auto d = commutator_ideal(a).span;
  Mat<F> gens = Mat<F>::Zero(a.dim(), d.dim());
  gens.bottomRows(a.p()) = d.basis();
  return Subspace<F>::span(gens);
}

template <class F>
bool commutator_equals_center(const TwoStepAlgebra<F>& a) {
  return commutator_subspace(a) == center(a);
}

template <class F>
struct AbelianSplit {
  TwoStepAlgebra<F> core;  // commutator ideal equals center
  int k = 0;               // dimension of the abelian factor
  /// Columns: core V, abelian factor, core Z, in the original coordinates.
  /// Re-expressing A in this basis with q_new = core.q() + k gives exactly
  /// direct_sum(core, abelian(k)).
  Mat<F> basis;
};

template <class F>
AbelianSplit<F> abelian_factor_split(const TwoStepAlgebra<F>& a) {
  const int q = a.q(), p = a.p(), n = a.dim();
  const Subspace<F> kv = central_v(a);
  const Subspace<F> d = commutator_ideal(a).span;
  const auto core_v = kv.standard_complement();
  const auto z_extra = d.standard_complement();
  const int qc = static_cast<int>(core_v.size()), pc = static_cast<int>(d.dim());
  const int k = static_cast<int>(kv.dim() + z_extra.size());

  Mat<F> basis = Mat<F>::Zero(n, n);
  int col = 0;
  for (auto i : core_v) basis(i, col++) = F(1);
  const Mat<F> kb = kv.basis();
  for (Eigen::Index j = 0; j < kb.cols(); ++j) basis.block(0, col++, q, 1) = kb.col(j);
  for (auto i : z_extra) basis(q + i, col++) = F(1);
  const Mat<F> db = d.basis();
  for (Eigen::Index j = 0; j < db.cols(); ++j) basis.block(q, col++, p, 1) = db.col(j);

  const auto full = change_basis(a, basis, qc + k);
  std::vector<Mat<F>> c;
  for (int m = 0; m < pc; ++m) c.push_back(full.c(m).topLeftCorner(qc, qc));
  TwoStepAlgebra<F> core(qc, pc, std::move(c), k == 0 ? a.label() : std::string{});
  return {std::move(core), k, std::move(basis)};
}

/// j(Z_k) = C_k^T, so that <J^k x, y> = [x, y]_k in the orthonormal
/// coordinate inner product.
template <class F>
std::vector<Mat<F>> j_map(const TwoStepAlgebra<F>& a) {
  std::vector<Mat<F>> j;
  for (int k = 0; k < a.p(); ++k) j.push_back(a.c(k).transpose());
  return j;
}

/// sum_k z_k J^k with formal z_1..z_p.
template <class F>
Mat<MultiPoly<F>> j_pencil(const TwoStepAlgebra<F>& a) {
  using P = MultiPoly<F>;
  Mat<P> s = Mat<P>::Zero(a.q(), a.q());
  const auto j = j_map(a);
  for (int k = 0; k < a.p(); ++k) {
    const P zk = P::var(k);
    for (int r = 0; r < a.q(); ++r)
      for (int c = 0; c < a.q(); ++c)
        if (!detail::zero(j[k](r, c))) s(r, c) += P(j[k](r, c)) * zk;
  }
  return s;
}

/// Symbolic test of j(Z)^2 = -|Z|^2 id as a polynomial identity in Z.
template <class F>
bool is_heisenberg_type(const TwoStepAlgebra<F>& a) {
  using P = MultiPoly<F>;
  if (a.p() == 0) return false;
  const Mat<P> s = j_pencil(a);
  P norm2;
  for (int k = 0; k < a.p(); ++k) norm2 += P::var(k) * P::var(k);
  Mat<P> m = s * s;
  for (int i = 0; i < a.q(); ++i) m(i, i) += norm2;
  return is_zero(m);
}

/// ad_X restricted to V as a p x q matrix: column j holds [X, e_j].
template <class F>
Mat<F> ad_matrix(const TwoStepAlgebra<F>& a, const Vec<F>& xv) {
  Mat<F> m(a.p(), a.q());
  for (int k = 0; k < a.p(); ++k) m.row(k) = xv.transpose() * a.c(k);
  return m;
}

template <class F>
struct Nonsingularity {
  enum class Kind { Nonsingular, Singular, Unknown };
  Kind kind = Kind::Unknown;
  std::string certificate;  // Nonsingular: which test succeeded
  /// Singular: j(Z)X = 0 with Z != 0 and X non-central, both in the
  /// original coordinates.
  Vec<F> witness_z, witness_x;
  int samples = 0;  // candidates examined by the witness search
};

namespace detail {

template <class F>
std::optional<Vec<F>> left_kernel_vector(const Mat<F>& m) {
  const auto rk = rank_kernel(Mat<F>(m.transpose()));
  if (rk.kernel.dim() == 0) return std::nullopt;
  return Vec<F>(rk.kernel.basis().col(0));
}

}  // namespace detail

/// Decided on the core of the abelian split (central directions are
/// excluded from the definition). Certificates: H-type; p = 1; p = 2 with q
/// even and a definite pencil Pfaffian. Singular witnesses come from a
/// search over basis vectors, pairwise sums and 256 seeded random vectors.
template <class F>
Nonsingularity<F> nonsingularity(const TwoStepAlgebra<F>& a, std::uint64_t seed = 0) {
  using Kind = typename Nonsingularity<F>::Kind;
  const auto split = abelian_factor_split(a);
  const auto& core = split.core;
  const int q = core.q(), p = core.p();
  Nonsingularity<F> out;
  if (p == 0) {
    out.kind = Kind::Nonsingular;
    out.certificate = "abelian";
    return out;
  }
  if (is_heisenberg_type(core)) {
    out.kind = Kind::Nonsingular;
    out.certificate = "H-type";
    return out;
  }
  if (p == 1 && !detail::zero(determinant(core.c(0)))) {
    out.kind = Kind::Nonsingular;
    out.certificate = "p=1, nondegenerate form";
    return out;
  }
  if constexpr (std::is_same_v<F, Rational>) {
    if (p == 2 && q % 2 == 0) {
      const auto pf = pfaffian(j_pencil(core));
      const int d = q / 2;
      std::vector<Rational> coeffs(d + 1);
      for (int e = 0; e <= d; ++e) coeffs[e] = pf.coeff({e, d - e});  // f(t, 1) in t = z1
      const QPoly f(coeffs);
      if (!f.is_zero() && f.degree() == d && sturm_real_roots(f) == 0) {
        out.kind = Kind::Nonsingular;
        out.certificate = "p=2, definite Pfaffian pencil";
        return out;
      }
    }
  }

  std::vector<Vec<F>> candidates;
  for (int i = q - 1; i >= 0; --i) candidates.push_back(unit_vector<F>(q, i));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) candidates.push_back(unit_vector<F>(q, i) + unit_vector<F>(q, j));
  Rng rng(seed);
  for (int s = 0; s < 256; ++s) {
    Vec<F> v(q);
    for (int i = 0; i < q; ++i) v(i) = F(random_small(rng, 3));
    if (!is_zero(v)) candidates.push_back(v);
  }
  const auto js = j_map(core);
  for (const auto& xv : candidates) {
    ++out.samples;
    const Mat<F> m = ad_matrix(core, xv);
    if (rank(m) == p) continue;
    const auto zv = detail::left_kernel_vector(m);
    if (!zv) continue;
    Mat<F> jz = Mat<F>::Zero(q, q);
    for (int k = 0; k < p; ++k) jz += (*zv)(k) * js[k];
    if (!is_zero(Vec<F>(jz * xv))) throw InvariantViolation("nonsingularity witness failed verification");
    Vec<F> x_core = Vec<F>::Zero(core.dim()), z_core = Vec<F>::Zero(core.dim());
    x_core.head(q) = xv;
    z_core.tail(p) = *zv;
    // core coordinates sit in columns [0, q) and [q + k, n) of the split basis
    const int n = a.dim();
    Mat<F> core_cols(n, core.dim());
    core_cols << split.basis.leftCols(q), split.basis.rightCols(p);
    out.kind = Kind::Singular;
    out.witness_x = core_cols * x_core;
    out.witness_z = core_cols * z_core;
    return out;
  }
  return out;
}

template <class F>
bool is_derivation(const TwoStepAlgebra<F>& a, const Mat<F>& d) {
  const int n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DomainError("is_derivation: size mismatch");
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const Vec<F> es = a.basis_vector(s), et = a.basis_vector(t);
      const Vec<F> lhs = d * a.bracket(es, et);
      const Vec<F> rhs = a.bracket(d * es, et) + a.bracket(es, d * et);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

/// Linear map f: A -> B as a B.dim() x A.dim() matrix.
template <class F>
bool is_homomorphism(const TwoStepAlgebra<F>& a, const TwoStepAlgebra<F>& b, const Mat<F>& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw DomainError("is_homomorphism: size mismatch");
  for (int s = 0; s < a.dim(); ++s)
    for (int t = s + 1; t < a.dim(); ++t) {
      const Vec<F> fs = f.col(s), ft = f.col(t);
      if (!(Vec<F>(f * a.bracket(a.basis_vector(s), a.basis_vector(t))) == b.bracket(fs, ft))) return false;
    }
  return true;
}

template <class F>
bool is_automorphism(const TwoStepAlgebra<F>& a, const Mat<F>& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) throw DomainError("is_automorphism: size mismatch");
  return !detail::zero(determinant(f)) && is_homomorphism(a, a, f);
}

/// X + Z -> X + 2Z.
template <class F>
Mat<F> standard_derivation(const TwoStepAlgebra<F>& a) {
  Mat<F> d = identity<F>(a.dim());
  for (int k = 0; k < a.p(); ++k) d(a.q() + k, a.q() + k) = F(2);
  return d;
}

template <class F>
struct AlgebraReport {
  int dim = 0;
  int p_prime = 0;  // dim of the commutator ideal
  int q_prime = 0;  // V dimension of the core
  bool commutator_equals_center = false;
  int center_dim = 0;
  int abelian_dim = 0;
  bool h_type = false;
  Nonsingularity<F> nonsingular;
};

template <class F>
AlgebraReport<F> analyze(const TwoStepAlgebra<F>& a, std::uint64_t seed = 0) {
  AlgebraReport<F> r;
  const auto split = abelian_factor_split(a);
  r.dim = a.dim();
  r.p_prime = split.core.p();
  r.q_prime = split.core.q();
  r.commutator_equals_center = commutator_equals_center(a);
  r.center_dim = static_cast<int>(center(a).dim());
  r.abelian_dim = split.k;
  r.h_type = is_heisenberg_type(a);
  r.nonsingular = nonsingularity(a, seed);
  return r;
}

}  // namespace nilpac
