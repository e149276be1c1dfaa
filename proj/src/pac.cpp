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


#include "nilpac/pac.hpp"

#include <thread>

#include "nilpac/analysis.hpp"
#include "nilpac/catalog.hpp"
#include "nilpac/random.hpp"

namespace nilpac {

Mat<QMultiPoly> symbolic_ad_matrix(const QAlgebra& a) {
  Mat<QMultiPoly> m(a.p(), a.q());
  for (int k = 0; k < a.p(); ++k)
    for (int j = 0; j < a.q(); ++j) {
      QMultiPoly e;
      for (int i = 0; i < a.q(); ++i)
        if (!a.c(k)(i, j).is_zero()) e += QMultiPoly::monomial(a.c(k)(i, j), {}) * QMultiPoly::var(i);
      m(k, j) = e;
    }
  return m;
}

namespace {

// Y1 followed by standard vectors completing it to a basis of V.
QMat complete_basis(const QVec& y1) {
  const int q = static_cast<int>(y1.size());
  const auto comp = Subspace<Rational>::span(QMat(y1)).standard_complement();
  QMat b(q, q);
  b.col(0) = y1;
  for (int k = 0; k < q - 1; ++k) b.col(k + 1) = unit_vector<Rational>(q, comp.at(k));
  return b;
}

bool verify_witness(const QAlgebra& a, const QMat& basis) {
  const int q = a.q();
  if (rank(basis) != q) return false;
  QMat brackets(a.p(), q - 1);
  for (int j = 1; j < q; ++j) brackets.col(j - 1) = ad_matrix(a, QVec(basis.col(0))) * basis.col(j);
  return rank(brackets) == q - 1;
}

}  // namespace

SufficientCondition sufficient_condition(const QAlgebra& a, std::uint64_t seed, int trials) {
  using Kind = SufficientCondition::Kind;
  SufficientCondition out;
  const int q = a.q();
  out.commutator_is_center = commutator_equals_center(a);
  if (!out.commutator_is_center) {
    out.kind = Kind::FailsProven;
    out.reason = "commutator ideal differs from the center";
    return out;
  }
  if (q == 0) {
    out.kind = Kind::FailsProven;
    out.reason = "V is zero";
    return out;
  }

  auto try_point = [&](const QVec& y) {
    if (is_zero(y) || rank(ad_matrix(a, y)) != q - 1) return false;
    const QMat b = complete_basis(y);
    if (!verify_witness(a, b)) throw InvariantViolation("sufficient-condition witness failed verification");
    out.kind = Kind::Holds;
    out.max_rank = q - 1;
    out.basis = b;
    out.reason = "[Y1, Yj], j = 2..q, linearly independent";
    return true;
  };
  for (int i = 0; i < q; ++i)
    if (try_point(unit_vector<Rational>(q, i))) return out;
  Rng rng(seed);
  auto random_points = [&](int count) {
    for (int t = 0; t < count; ++t) {
      QVec y(q);
      for (int i = 0; i < q; ++i) y(i) = Rational(nonzero_int(rng, 97));
      if (try_point(y)) return true;
    }
    return false;
  };
  if (random_points(32)) return out;

  const auto sr = symbolic_max_rank(symbolic_ad_matrix(a), seed, trials);
  out.max_rank = sr.rank;
  out.trials = sr.trials;
  if (sr.rank >= q - 1 && random_points(1024)) return out;
  if (sr.rank < q - 1 && !sr.probabilistic) {
    out.kind = Kind::FailsProven;
    out.reason = "generic rank of ad_Y|V is " + std::to_string(sr.rank) + " < q - 1 = " + std::to_string(q - 1);
  } else {
    out.kind = Kind::FailsProbabilistic;
    out.reason = "no rank " + std::to_string(q - 1) + " point found in " + std::to_string(sr.trials) +
                 " random substitutions";
  }
  return out;
}

bool genericity_member(const QAlgebra& a, const std::vector<int>& rows) {
  const int q = a.q();
  if (a.p() < q - 1) throw DomainError("genericity test needs q - 1 <= p");
  if (static_cast<int>(rows.size()) != q - 1) throw DomainError("genericity test needs q - 1 rows");
  if (q <= 1) return true;
  QMat m(q - 1, q - 1);
  for (int r = 0; r < q - 1; ++r) {
    if (rows[r] < 0 || rows[r] >= a.p()) throw DomainError("genericity row out of range");
    for (int j = 1; j < q; ++j) m(r, j - 1) = a.c(rows[r])(0, j);
  }
  return !determinant(m).is_zero();
}

bool genericity_member(const QAlgebra& a) {
  if (a.p() < a.q() - 1) throw DomainError("genericity test needs q - 1 <= p");
  std::vector<int> rows;
  for (int r = 0; r + 1 < a.q(); ++r) rows.push_back(r);
  return genericity_member(a, rows);
}

QAlgebra random_tensor(int p, int q, long bound, std::uint64_t seed) {
  Rng rng(seed);
  auto a = QAlgebra::zero(q, p, "random(" + std::to_string(p) + "," + std::to_string(q) + ")#" + std::to_string(seed));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      QVec z(p);
      for (int k = 0; k < p; ++k) z(k) = random_rational(rng, bound);
      a.set_bracket(i, j, z);
    }
  return a;
}

namespace {

struct SampleResult {
  bool surjective = false;
  bool member = false;
  SufficientCondition::Kind kind = SufficientCondition::Kind::FailsProven;
};

SampleResult evaluate_sample(int p, int q, long bound, std::uint64_t seed) {
  const QAlgebra a = random_tensor(p, q, bound, seed);
  SampleResult r;
  r.surjective = commutator_ideal(a).equals_declared;
  r.member = p >= q - 1 && genericity_member(a);
  r.kind = sufficient_condition(a, seed).kind;
  return r;
}

}  // namespace

ScanReport scan(int p, int q, int samples, std::uint64_t seed, long bound, int threads) {
  if (q < 2 || p < 1 || p > q * (q - 1) / 2)
    throw DomainError("scan needs 1 <= p <= q(q-1)/2, got (p, q) = (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  if (samples < 1) throw DomainError("scan needs at least one sample");
  if (bound < 1) throw DomainError("scan needs a coefficient bound >= 1");
  if (threads < 1) threads = 1;

  std::vector<SampleResult> results(samples);
  auto work = [&](int first, int stride) {
    for (int i = first; i < samples; i += stride)
      results[i] = evaluate_sample(p, q, bound, derive_seed(seed, static_cast<std::uint64_t>(i)));
  };
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  ScanReport rep;
  rep.p = p;
  rep.q = q;
  rep.samples = samples;
  rep.seed = seed;
  rep.bound = bound;
  if (p >= q - 1) rep.in_o = 0;
  using Kind = SufficientCondition::Kind;
  for (const auto& r : results) {
    rep.surjective += r.surjective;
    if (rep.in_o) *rep.in_o += r.member;
    rep.in_o_and_surjective += r.member && r.surjective;
    rep.holds += r.kind == Kind::Holds;
    rep.fails_proven += r.kind == Kind::FailsProven;
    rep.fails_probabilistic += r.kind == Kind::FailsProbabilistic;
    rep.violations += r.member && r.surjective && r.kind != Kind::Holds;
    rep.in_o_not_holds += r.member && r.kind != Kind::Holds;
  }
  return rep;
}

std::string status_text(PacVerdict::Status s) {
  switch (s) {
    case PacVerdict::Status::Proven: return "PAC_PROVEN";
    case PacVerdict::Status::NotPac: return "NOT_PAC";
    default: return "UNKNOWN";
  }
}

std::string kind_text(SufficientCondition::Kind k) {
  switch (k) {
    case SufficientCondition::Kind::Holds: return "Holds";
    case SufficientCondition::Kind::FailsProven: return "FailsProven";
    default: return "FailsProbabilistic";
  }
}

std::optional<std::string> rank_one_family_match(const QAlgebra& a) {
  if (a.p() == 1 && a.q() % 2 == 0 && a.q() > 0 && a == heis(a.q() / 2)) return "heis" + std::to_string(a.q() / 2);
  if (a.p() == 3 && a.q() % 4 == 0 && a.q() > 0 && a == quat(a.q() / 4)) return "quat" + std::to_string(a.q() / 4);
  if (a.p() == 7 && a.q() == 8 && a == oct()) return "oct";
  return std::nullopt;
}

PacVerdict pac_verdict(const QAlgebra& a, std::uint64_t seed, int trials) {
  using Status = PacVerdict::Status;
  PacVerdict v;
  std::optional<Classification> cls;
  if (a.dim() <= 6) {
    cls = classify_dim_le6(a);
    if (cls->kind == Classification::Kind::Named && cls->name == "N6") {
      v.status = Status::NotPac;
      v.reason = "N6-isomorphic";
      v.name = "N6";
      v.checks.push_back("fingerprint matches N6");
      v.condition = sufficient_condition(a, seed, trials);
      v.checks.push_back("sufficient condition: " + kind_text(v.condition.kind) + " (" + v.condition.reason + ")");
      return v;
    }
  }
  v.condition = sufficient_condition(a, seed, trials);
  v.checks.push_back("sufficient condition: " + kind_text(v.condition.kind) + " (" + v.condition.reason + ")");
  if (v.condition.kind == SufficientCondition::Kind::Holds) {
    v.status = Status::Proven;
    v.reason = "sufficient-condition";
    return v;
  }
  if (cls) {
    if (cls->kind == Classification::Kind::Named) {
      v.status = Status::Proven;
      v.reason = "table-1-classification";
      v.name = cls->name;
      v.checks.push_back("classified as " + cls->name);
      return v;
    }
    if (cls->kind == Classification::Kind::Abelian) {
      v.status = Status::Proven;
      v.reason = "abelian";
      v.checks.push_back("abelian: every automorphism is central");
      return v;
    }
    v.checks.push_back("dimension <= 6 but no classification match");
  } else {
    v.checks.push_back("dimension " + std::to_string(a.dim()) + " > 6: no table classification");
  }
  if (auto fam = rank_one_family_match(a)) {
    v.status = Status::Proven;
    v.reason = "theorem-C-family";
    v.name = *fam;
    v.checks.push_back("structure constants equal " + *fam);
    return v;
  }
  v.checks.push_back("no exact heis/quat/oct structure-constant match");
  v.status = Status::Unknown;
  v.probabilistic = v.condition.kind == SufficientCondition::Kind::FailsProbabilistic;
  v.trials = v.condition.trials;
  return v;
}

}  // namespace nilpac
