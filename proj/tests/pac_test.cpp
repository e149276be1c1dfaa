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


#include <gtest/gtest.h>

#include "nilpac/catalog.hpp"
#include "nilpac/pac.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nilpac;
using nilpac::testing::qvec;
using Kind = SufficientCondition::Kind;
using Status = PacVerdict::Status;

namespace {

// [Y1, Yj] for j = 2..q as columns, computed from raw structure constants.
QMat witness_brackets(const QAlgebra& a, const QMat& basis) {
  const int q = a.q();
  QMat out(a.p(), q - 1);
  for (int j = 1; j < q; ++j)
    for (int k = 0; k < a.p(); ++k) {
      Rational s(0);
      for (int r = 0; r < q; ++r)
        for (int c = 0; c < q; ++c) s += basis(r, 0) * basis(c, j) * a.c(k)(r, c);
      out(k, j - 1) = s;
    }
  return out;
}

class HoldsOn : public ::testing::TestWithParam<const char*> {};

TEST_P(HoldsOn, WitnessIsSelfChecking) {
  const QAlgebra a = build_catalog(GetParam());
  const auto sc = sufficient_condition(a);
  ASSERT_EQ(sc.kind, Kind::Holds) << sc.reason;
  EXPECT_TRUE(sc.commutator_is_center);
  EXPECT_EQ(sc.max_rank, a.q() - 1);
  EXPECT_FALSE(oracle::leibniz_det(sc.basis) == Rational(0));
  EXPECT_TRUE(oracle::independent_columns(witness_brackets(a, sc.basis)));
}

INSTANTIATE_TEST_SUITE_P(Catalog, HoldsOn, ::testing::Values("heis1", "N5", "N6prime", "quat1", "oct"));

TEST(SufficientCondition, Heis3UsesX1) {
  const auto sc = sufficient_condition(heis(1));
  EXPECT_EQ(QVec(sc.basis.col(0)), qvec({1, 0}));
}

TEST(SufficientCondition, FailsProvenWithRankBounds) {
  const auto h5 = sufficient_condition(heis(2));
  EXPECT_EQ(h5.kind, Kind::FailsProven);
  EXPECT_EQ(h5.max_rank, 1);
  const auto n6s = sufficient_condition(n6());
  EXPECT_EQ(n6s.kind, Kind::FailsProven);
  EXPECT_EQ(n6s.max_rank, 2);
  EXPECT_EQ(n6s.trials, 0);
  const auto ab = sufficient_condition(build_catalog("heis1+R1"));
  EXPECT_EQ(ab.kind, Kind::FailsProven);
  EXPECT_FALSE(ab.commutator_is_center);
}

TEST(SufficientCondition, SymbolicAdMatrixEvaluates) {
  const QAlgebra a = n6prime();
  const auto m = symbolic_ad_matrix(a);
  const std::vector<Rational> y{Rational(2), Rational(-1), Rational(5)};
  const QVec yv = qvec({2, -1, 5});
  const QMat direct = ad_matrix(a, yv);
  for (int k = 0; k < a.p(); ++k)
    for (int j = 0; j < a.q(); ++j) EXPECT_EQ(m(k, j)(y), direct(k, j));
}

TEST(Genericity, FixedRowTest) {
  EXPECT_TRUE(genericity_member(heis(1)));
  // [X1, X2] = Z3 and [X1, X3] = -Z2 miss row Z1
  EXPECT_FALSE(genericity_member(n6prime()));
  EXPECT_TRUE(genericity_member(n6prime(), {1, 2}));
  auto flat = QAlgebra::zero(3, 2);
  flat.set_bracket(1, 2, qvec({1, 1}));
  EXPECT_FALSE(genericity_member(flat));
  EXPECT_THROW(genericity_member(heis(2)), DomainError);
  EXPECT_THROW(genericity_member(n6prime(), {0, 3}), DomainError);
}

TEST(Genericity, MembershipImpliesCriterion) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {4, 4}, {5, 5}}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const QAlgebra a = random_tensor(p, q, 3, derive_seed(77, s));
      if (genericity_member(a) && commutator_ideal(a).equals_declared)
        ASSERT_EQ(sufficient_condition(a, s).kind, Kind::Holds) << p << "," << q << " seed " << s;
    }
  }
}

TEST(Scan, DeterministicAcrossThreads) {
  const auto a = scan(3, 4, 60, 42, 10, 1);
  const auto b = scan(3, 4, 60, 42, 10, 3);
  EXPECT_EQ(a.surjective, b.surjective);
  EXPECT_EQ(a.in_o, b.in_o);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.fails_proven, b.fails_proven);
  EXPECT_EQ(a.violations, 0);
  EXPECT_LE(a.in_o_and_surjective, a.samples);
}

TEST(Scan, TypeOneTwoAlwaysHolds) {
  const auto r = scan(1, 2, 50, 9, 10);
  EXPECT_EQ(r.holds, 50);
  EXPECT_EQ(r.surjective, 50);
}

TEST(Scan, SmallBoundStillCounts) {
  const auto r = scan(2, 4, 40, 1, 1);
  EXPECT_FALSE(r.in_o.has_value());
  EXPECT_EQ(r.holds + r.fails_proven + r.fails_probabilistic, 40);
}

TEST(Scan, RejectsBadArguments) {
  EXPECT_THROW(scan(2, 3, 0, 1, 10), DomainError);
  EXPECT_THROW(scan(4, 3, 10, 1, 10), DomainError);
  EXPECT_THROW(scan(0, 3, 10, 1, 10), DomainError);
  EXPECT_THROW(scan(1, 2, 10, 1, 0), DomainError);
}

TEST(PacVerdict, N6IsNotPacInAnyBasis) {
  EXPECT_EQ(pac_verdict(n6()).status, Status::NotPac);
  Rng rng(31);
  for (int s = 0; s < 10; ++s) {
    const QAlgebra b = nilpac::testing::random_basis_change(n6(), rng).with_label("");
    const auto v = pac_verdict(b);
    EXPECT_EQ(v.status, Status::NotPac);
    EXPECT_EQ(v.reason, "N6-isomorphic");
  }
}

TEST(PacVerdict, ProvenPaths) {
  EXPECT_EQ(pac_verdict(n5()).reason, "sufficient-condition");
  const auto h5 = pac_verdict(heis(2));
  EXPECT_EQ(h5.reason, "table-1-classification");
  EXPECT_EQ(h5.name, "heis2");
  const auto h7 = pac_verdict(heis(3));
  EXPECT_EQ(h7.status, Status::Proven);
  EXPECT_EQ(h7.reason, "theorem-C-family");
  EXPECT_EQ(h7.name, "heis3");
  EXPECT_EQ(pac_verdict(quat(2)).reason, "theorem-C-family");
  EXPECT_EQ(pac_verdict(QAlgebra::abelian(3)).reason, "abelian");
  const auto r = pac_verdict(random_tensor(3, 4, 10, 5));
  EXPECT_EQ(r.status, Status::Proven);
  EXPECT_EQ(r.reason, "sufficient-condition");
  EXPECT_EQ(r.condition.basis.cols(), 4);
}

TEST(PacVerdict, UnknownListsChecks) {
  const auto v = pac_verdict(build_catalog("heis2+heis2"));
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_GE(v.checks.size(), 3u);
}

}  // namespace
