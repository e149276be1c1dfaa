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


#include "nilpac/automorphisms.hpp"

#include <gmpxx.h>

#include "nilpac/catalog.hpp"

namespace nilpac {

using Quat = Quaternion<Rational>;

N6Witness n6_witness() {
  N6Witness w;
  w.algebra = cast_algebra<RatFun>(n6());
  const int n = w.algebra.dim();
  enum { X1, X2, X3, X4, Z1, Z2 };
  AdditiveMap nil(n);
  nil(X4, X1) = -DiffOp::d();
  nil(X3, X2) = DiffOp::d();
  nil(Z2, Z1) = DiffOp::d();
  const AdditiveMap id = AdditiveMap::identity(n);
  w.f = id + nil;
  w.f_inverse = id - nil;
  if (!(w.f * w.f_inverse == id) || !(w.f_inverse * w.f == id))
    throw InvariantViolation("N6 witness inverse check failed");
  if (!preserves_brackets(w.algebra, w.f, 24, 7)) throw InvariantViolation("N6 witness does not preserve brackets");
  const Vec<RatFun> x1 = w.algebra.basis_vector(X1);
  const RatFun t = RatFun::t();
  w.residual = w.f.apply(Vec<RatFun>(t * x1)) - Vec<RatFun>(t * w.f.apply(x1));
  return w;
}

QMat conjugation_heis3c() {
  const QAlgebra a = heis3c();
  QMat c = QMat::Zero(6, 6);
  for (int i = 0; i < 6; ++i) c(i, i) = Rational(i % 2 == 0 ? 1 : -1);
  if (!is_automorphism(a, c)) throw InvariantViolation("conjugation is not an automorphism of heis3C");
  return c;
}

namespace {

Quat basis_quat(int b) {
  switch (b) {
    case 0: return Quat(1);
    case 1: return Quat::i();
    case 2: return Quat::j();
    default: return Quat::k();
  }
}

using QRow = std::vector<Quat>;

QRow to_quat_row(const QVec& v) {
  QRow r(v.size() / 4);
  for (std::size_t t = 0; t < r.size(); ++t) {
    const auto o = static_cast<Eigen::Index>(4 * t);
    r[t] = Quat(v(o), v(o + 1), v(o + 2), v(o + 3));
  }
  return r;
}

// <x, y> = sum x_s conj(y_s)
Quat inner(const QRow& x, const QRow& y) {
  Quat acc;
  for (std::size_t s = 0; s < x.size(); ++s) acc += x[s] * y[s].conj();
  return acc;
}

bool is_zero_row(const QRow& r) {
  for (const auto& x : r)
    if (!is_zero(x)) return false;
  return true;
}

// Real matrix of x -> x M on H^n (row vectors), coordinates (1, i, j, k)
// per quaternionic slot, embedded in quat(n) with the given Z scaling.
QMat right_action_matrix(const std::vector<QRow>& m, const Rational& z_scale) {
  const int n = static_cast<int>(m.size());
  const int q = 4 * n;
  QMat g = QMat::Zero(q + 3, q + 3);
  for (int t = 0; t < n; ++t)
    for (int b = 0; b < 4; ++b) {
      const Quat e = basis_quat(b);
      for (int s = 0; s < n; ++s) {
        const auto c = (e * m[t][s]).components();
        for (int r = 0; r < 4; ++r) g(4 * s + r, 4 * t + b) = c[r];
      }
    }
  for (int k = 0; k < 3; ++k) g(q + k, q + k) = z_scale;
  return g;
}

void check_quat_automorphism(int n, const QMat& g) {
  const QAlgebra a = quat(n);
  if (!is_automorphism(a, g)) throw InvariantViolation("quaternionic map is not an automorphism");
  const QMat gv = g.topLeftCorner(4 * n, 4 * n);
  for (const auto& j : j_map(a))
    if (!(QMat(gv * j) == QMat(j * gv))) throw InvariantViolation("quaternionic map does not commute with j(Z)");
}

}  // namespace

QMat sp_right_mult(int n, const Quat& u) {
  if (n < 1) throw DomainError("quat(n) needs n >= 1");
  if (u.norm2() != Rational(1)) throw DomainError("sp_right_mult needs a unit quaternion");
  std::vector<QRow> m(n, QRow(n));
  for (int t = 0; t < n; ++t) m[t][t] = u;
  const QMat g = right_action_matrix(m, Rational(1));
  check_quat_automorphism(n, g);
  return g;
}

std::array<mpz_class, 4> four_squares(const mpz_class& m_in) {
  if (m_in < 0) throw DomainError("four_squares of a negative number");
  std::array<mpz_class, 4> out{0, 0, 0, 0};
  if (m_in == 0) return out;
  mpz_class m = m_in, scale = 1;
  while (m % 4 == 0) {
    m /= 4;
    scale *= 2;
  }
  auto finish = [&](std::array<mpz_class, 4> r) {
    for (auto& x : r) x *= scale;
    return r;
  };
  // two squares for p prime, p = 1 mod 4: Hermite-Serret descent
  auto two_squares_prime = [](const mpz_class& p, mpz_class& c, mpz_class& d) {
    const mpz_class e = (p - 1) / 4;
    mpz_class x;
    for (mpz_class z = 2;; ++z) {
      mpz_powm(x.get_mpz_t(), z.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      if ((x * x + 1) % p == 0) break;
    }
    mpz_class r0 = p, r1 = x;
    while (r1 * r1 > p) {
      const mpz_class r2 = r0 % r1;
      r0 = r1;
      r1 = r2;
    }
    c = r1;
    const mpz_class rest = p - c * c;
    d = sqrt(rest);
    return d * d == rest;
  };
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(mpz_class(m));
  const mpz_class root = sqrt(m);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    // small m: walk a, b deterministically; otherwise sample
    mpz_class a, b;
    if (m < 4096) {
      a = attempt / 64;
      b = attempt % 64;
      if (a > root) break;
    } else {
      a = rng.get_z_range(root + 1);
      b = rng.get_z_range(sqrt(m - a * a) + 1);
    }
    const mpz_class rest = m - a * a - b * b;
    if (rest < 0) continue;
    const mpz_class sq = sqrt(rest);
    if (sq * sq == rest) return finish({a, b, sq, 0});
    if (rest == 2) return finish({a, b, 1, 1});
    if (rest % 4 == 1 && mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
      mpz_class c, d;
      if (two_squares_prime(rest, c, d)) return finish({a, b, c, d});
    }
  }
  throw InvariantViolation("four_squares search failed");
}

namespace {

// Quaternion of squared norm r for a positive rational r.
Quat quat_with_norm(const Rational& r) {
  const mpz_class num = r.num(), den = r.den();
  const auto s = four_squares(num * den);
  return Quat(Rational(s[0], den), Rational(s[1], den), Rational(s[2], den), Rational(s[3], den));
}

}  // namespace

QMat quat_send(int n, const QVec& v) {
  if (n < 1) throw DomainError("quat(n) needs n >= 1");
  if (v.size() != 4 * n) throw DomainError("quat_send needs a V vector of length 4n");
  const QRow first = to_quat_row(v);
  if (is_zero_row(first)) throw DomainError("quat_send needs a nonzero vector");
  const Rational c = inner(first, first).a;

  // Orthogonal complement by unnormalized Gram-Schmidt, then each row is
  // rescaled on the left by a quaternion so all rows have squared norm c.
  std::vector<QRow> rows{first};
  std::vector<Rational> norms{c};
  for (int t = 0; t < n && static_cast<int>(rows.size()) < n; ++t) {
    QRow x(n);
    x[t] = Quat(1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Quat alpha = inner(x, rows[k]) * Quat(norms[k].inverse());
      for (int s = 0; s < n; ++s) x[s] -= alpha * rows[k][s];
    }
    if (is_zero_row(x)) continue;
    norms.push_back(inner(x, x).a);
    rows.push_back(std::move(x));
  }
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const Quat s = quat_with_norm(c / norms[k]);
    for (auto& e : rows[k]) e = s * e;
  }
  const QMat g = right_action_matrix(rows, c);
  check_quat_automorphism(n, g);
  if (!(QVec(g.col(0).head(4 * n)) == v)) throw InvariantViolation("quat_send does not hit the target");
  return g;
}

QMat symplectic_send(int n, const QVec& v) {
  if (n < 1) throw DomainError("heis(n) needs n >= 1");
  if (v.size() != 2 * n) throw DomainError("symplectic_send needs a V vector of length 2n");
  if (is_zero(v)) throw DomainError("symplectic_send needs a nonzero vector");
  const QAlgebra a = heis(n);
  const QMat& w = a.c(0);
  auto omega = [&](const QVec& x, const QVec& y) { return Rational(x.dot(w * y)); };

  std::vector<QVec> pool;
  for (int i = 0; i < 2 * n; ++i) pool.push_back(unit_vector<Rational>(2 * n, i));
  std::vector<QVec> basis;
  QVec f1 = v;
  while (true) {
    // partner for f1 from the pool, then project the pool off span(f1, f2)
    std::optional<QVec> f2;
    for (const auto& e : pool) {
      const Rational s = omega(f1, e);
      if (!s.is_zero()) {
        f2 = QVec(e * s.inverse());
        break;
      }
    }
    if (!f2) throw InvariantViolation("no symplectic partner found");
    basis.push_back(f1);
    basis.push_back(*f2);
    std::vector<QVec> next;
    for (const auto& e : pool) {
      const QVec pe = e - omega(e, *f2) * f1 + omega(e, f1) * *f2;
      if (!is_zero(pe)) next.push_back(pe);
    }
    if (static_cast<int>(basis.size()) == 2 * n) break;
    pool = std::move(next);
    if (pool.empty()) throw InvariantViolation("symplectic basis ran out of vectors");
    f1 = pool.front();
  }
  QMat g = QMat::Zero(2 * n + 1, 2 * n + 1);
  for (int i = 0; i < 2 * n; ++i) g.col(i).head(2 * n) = basis[i];
  g(2 * n, 2 * n) = Rational(1);
  if (!is_automorphism(a, g)) throw InvariantViolation("symplectic_send is not an automorphism");
  return g;
}

}  // namespace nilpac
