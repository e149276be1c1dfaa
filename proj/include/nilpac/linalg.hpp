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
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nilpac/error.hpp"
#include "nilpac/random.hpp"
#include "nilpac/scalar.hpp"

namespace nilpac {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

using QMat = Mat<Rational>;
using QVec = Vec<Rational>;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!detail::zero(m(i, j))) return false;
  return true;
}

template <class F>
Mat<F> identity(Eigen::Index n) {
  Mat<F> m = Mat<F>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
Vec<F> unit_vector(Eigen::Index n, Eigen::Index i) {
  Vec<F> v = Vec<F>::Zero(n);
  v(i) = F(1);
  return v;
}

template <class F>
struct Rref {
  Mat<F> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
Rref<F> rref(Mat<F> m) {
  Rref<F> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && detail::zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const F inv = F(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || detail::zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
Eigen::Index rank(const Mat<F>& m) {
  return rref(m).rank();
}

/// Linear subspace of F^n, held as the nonzero rows of a reduced echelon
/// matrix so that equal subspaces have equal representations.
template <class F>
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient = 0) : n_(ambient), rows_(0, ambient) {}

  /// Span of the columns of `gens`; dependent generators are dropped.
  static Subspace span(const Mat<F>& gens) {
    Subspace s(gens.rows());
    if (gens.cols() == 0) return s;
    auto r = rref<F>(gens.transpose());
    s.rows_ = r.reduced.topRows(r.rank());
    s.pivots_ = std::move(r.pivots);
    return s;
  }
  /// Like span, but throws InvariantViolation when the columns are dependent.
  static Subspace from_basis(const Mat<F>& basis) {
    Subspace s = span(basis);
    if (s.dim() != basis.cols()) throw InvariantViolation("Subspace basis vectors are linearly dependent");
    return s;
  }
  static Subspace whole(Eigen::Index n) { return span(identity<F>(n)); }

  Eigen::Index ambient() const { return n_; }
  Eigen::Index dim() const { return rows_.rows(); }
  /// Echelon basis as columns.
  Mat<F> basis() const { return rows_.transpose(); }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  bool contains(const Vec<F>& v) const {
    if (v.size() != n_) throw DomainError("Subspace::contains: dimension mismatch");
    // Reduce v against the echelon rows; v is inside iff nothing remains.
    Vec<F> r = v;
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const F c = r(pivots_[i]);
      if (!detail::zero(c)) r -= c * rows_.row(i).transpose();
    }
    return is_zero(r);
  }
  bool contains(const Subspace& o) const {
    for (Eigen::Index i = 0; i < o.dim(); ++i)
      if (!contains(Vec<F>(o.rows_.row(i).transpose()))) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    Mat<F> g(a.n_, a.dim() + b.dim());
    g << a.basis(), b.basis();
    return span(g);
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_.rows() == b.rows_.rows() && a.rows_ == b.rows_;
  }

  /// Standard basis vectors e_i, taken greedily in index order, that extend
  /// this subspace to the whole space.
  std::vector<Eigen::Index> standard_complement() const {
    std::vector<Eigen::Index> out;
    Subspace acc = *this;
    for (Eigen::Index i = 0; i < n_ && acc.dim() < n_; ++i) {
      const Vec<F> e = unit_vector<F>(n_, i);
      if (acc.contains(e)) continue;
      Mat<F> g(n_, 1);
      g.col(0) = e;
      acc = acc + span(g);
      out.push_back(i);
    }
    return out;
  }

 private:
  Eigen::Index n_;
  Mat<F> rows_;
  std::vector<Eigen::Index> pivots_;
};

template <class F>
struct RankKernel {
  Eigen::Index rank;
  Subspace<F> kernel;
};

template <class F>
RankKernel<F> rank_kernel(const Mat<F>& m) {
  const auto r = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Mat<F> k = Mat<F>::Zero(n, n - r.rank());
  Eigen::Index c = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, c) = F(1);
    for (Eigen::Index i = 0; i < r.rank(); ++i) k(r.pivots[i], c) = -r.reduced(i, f);
    ++c;
  }
  return {r.rank(), Subspace<F>::span(k)};
}

namespace detail {

inline Rational bareiss_rational(const Mat<Rational>& m) {
  const Eigen::Index n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return Rational(0);
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1] * sign, scale);
}

template <class F>
F gauss_det(Mat<F> m) {
  const Eigen::Index n = m.rows();
  F det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    while (piv < n && zero(m(piv, k))) ++piv;
    if (piv == n) return F(0);
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    const F inv = F(1) / m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (zero(m(i, k))) continue;
      const F f = m(i, k) * inv;
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Exact determinant: fraction-free Bareiss elimination over the integers
/// for rationals, Gaussian elimination for other fields.
template <class F>
F determinant(const Mat<F>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return F(1);
  if constexpr (std::is_same_v<F, Rational>)
    return detail::bareiss_rational(m);
  else
    return detail::gauss_det(m);
}

/// Determinant by cofactor expansion; only ring operations, so it works for
/// polynomial entries.
template <class R>
R expand_determinant(const Mat<R>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (detail::zero(m(0, j))) continue;
    Mat<R> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const R term = m(0, j) * expand_determinant(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// Gauss-Jordan inverse; throws DomainError for singular input.
template <class F>
Mat<F> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<F> aug(n, 2 * n);
  aug << m, identity<F>(n);
  const auto r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw DomainError("inverse of a singular matrix");
  return r.reduced.rightCols(n);
}

template <class R>
bool is_skew(const Mat<R>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  return true;
}

namespace detail {

template <class R>
R pfaffian_rec(const Mat<R>& a, std::vector<Eigen::Index>& idx) {
  if (idx.empty()) return R(1);
  const Eigen::Index first = idx.front();
  R acc(0);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const R& x = a(first, idx[k]);
    if (zero(x)) continue;
    std::vector<Eigen::Index> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    const R term = x * pfaffian_rec(a, rest);
    // Pf = sum_{j>=2} (-1)^j a_1j Pf(minor) with 1-based j = k + 1.
    if (k % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row, with
/// Pf([[0,a],[-a,0]]) = a. Works over any commutative ring.
template <class R>
R pfaffian(const Mat<R>& m) {
  if (m.rows() != m.cols()) throw DomainError("pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw DomainError("pfaffian of an odd-dimensional matrix");
  if (!is_skew(m)) throw DomainError("pfaffian of a matrix that is not skew-symmetric");
  std::vector<Eigen::Index> idx(m.rows());
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  return detail::pfaffian_rec(m, idx);
}

struct SymbolicRank {
  int rank = 0;
  bool probabilistic = false;
  int trials = 0;  // random substitutions performed, 0 on the exact path
};

namespace detail {

inline void combinations(int n, int k, int start, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace detail

/// Generic rank of a matrix of polynomials: exact minor enumeration when
/// min(rows, cols) <= 4 and both sides are <= 8, otherwise the maximum rank
/// over `trials` seeded substitutions with coordinates from
/// {-bound..bound} \ {0}. A randomized result that reaches min(rows, cols)
/// is exact and is reported as such.
inline SymbolicRank symbolic_max_rank(const Mat<QMultiPoly>& m, std::uint64_t seed = 0, int trials = 16,
                                      long bound = 97) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  const int full = std::min(rows, cols);
  SymbolicRank out;
  if (full == 0) return out;
  if (full <= 4 && rows <= 8 && cols <= 8) {
    for (int s = full; s >= 1; --s) {
      const auto rsets = detail::combinations(rows, s);
      const auto csets = detail::combinations(cols, s);
      for (const auto& rs : rsets)
        for (const auto& cs : csets) {
          Mat<QMultiPoly> minor(s, s);
          for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) minor(i, j) = m(rs[i], cs[j]);
          if (!expand_determinant(minor).is_zero()) {
            out.rank = s;
            return out;
          }
        }
    }
    return out;
  }
  int nvars = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) nvars = std::max(nvars, m(i, j).nvars());
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> point(nvars);
    for (auto& x : point) x = Rational(nonzero_int(rng, bound));
    QMat sub(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) sub(i, j) = m(i, j)(point);
    out.rank = std::max(out.rank, static_cast<int>(rank(sub)));
    out.trials = t + 1;
    if (out.rank == full) break;
  }
  out.probabilistic = out.rank < full;
  return out;
}

}  // namespace nilpac
