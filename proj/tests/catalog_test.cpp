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

#include <set>

#include "nilpac/catalog.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace nilpac;

namespace {

QMultiPoly z(int k) { return QMultiPoly::var(k); }

bool equal_up_to_sign(const QMultiPoly& a, const QMultiPoly& b) { return a == b || a == -b; }

}  // namespace

TEST(Catalog, Dimensions) {
  EXPECT_EQ(heis(2).dim(), 5);
  EXPECT_EQ(heis(2).p(), 1);
  EXPECT_EQ(quat(1).dim(), 7);
  EXPECT_EQ(quat(2).dim(), 11);
  EXPECT_EQ(oct().dim(), 15);
  EXPECT_EQ(n6prime().p(), 3);
  EXPECT_THROW(build_catalog("heis0"), DomainError);
  EXPECT_THROW(build_catalog("nope"), DomainError);
  EXPECT_EQ(build_catalog("heis1+R2").dim(), 5);
  EXPECT_EQ(build_catalog("heis1+R2").label(), "heis1+R2");
}

TEST(Catalog, OctonionicBrackets) {
  const auto o = oct();
  int nonzero = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (!is_zero(o.bracket_basis(i, j))) ++nonzero;
  EXPECT_EQ(nonzero, 28);
  for (int i = 1; i < 8; ++i) EXPECT_EQ(o.bracket_basis(0, i), unit_vector<Rational>(7, i - 1));
  for (const auto& j : oct_j_matrices()) EXPECT_TRUE(is_skew(j));
}

TEST(Catalog, QuaternionicRelations) {
  const auto a = quat(1);
  auto br = [&](int i, int j) { return a.bracket_basis(i, j); };
  const QVec z1 = unit_vector<Rational>(3, 0), z2 = unit_vector<Rational>(3, 1), z3 = unit_vector<Rational>(3, 2);
  EXPECT_EQ(br(0, 1), z1);
  EXPECT_EQ(br(0, 2), z2);
  EXPECT_EQ(br(0, 3), z3);
  EXPECT_EQ(br(1, 2), z3);
  EXPECT_EQ(br(1, 3), QVec(-z2));
  EXPECT_EQ(br(2, 3), z1);
  EXPECT_EQ(br(3, 1), z2);
}

TEST(Catalog, BaseNormalization) {
  for (const char* n : {"heis1", "quat1", "oct"}) {
    const auto a = base_normalized(n);
    for (int i = 1; i < a.q(); ++i) EXPECT_EQ(a.bracket_basis(0, i), unit_vector<Rational>(a.p(), i - 1));
  }
  EXPECT_THROW(base_normalized("N6"), DomainError);
}

TEST(PfaffianPencil, TypeTwoFourEntries) {
  const QMultiPoly hh = pfaffian_pencil(build_catalog("heis1+heis1"));
  const QMultiPoly hc = pfaffian_pencil(heis3c());
  const QMultiPoly n = pfaffian_pencil(n6());
  EXPECT_TRUE(equal_up_to_sign(hh, z(0) * z(1)));
  EXPECT_TRUE(equal_up_to_sign(hc, z(0) * z(0) + z(1) * z(1)));
  EXPECT_TRUE(equal_up_to_sign(n, -(z(1) * z(1))));
  EXPECT_EQ(hh, oracle::pencil_pfaffian(build_catalog("heis1+heis1")));
  EXPECT_EQ(hc, oracle::pencil_pfaffian(heis3c()));
  EXPECT_EQ(n, oracle::pencil_pfaffian(n6()));
  EXPECT_THROW(pfaffian_pencil(n5()), DomainError);
}

TEST(Fingerprint, Examples) {
  EXPECT_EQ(fingerprint(n6prime()), (Fingerprint{6, 0, 3, 3, 'n'}));
  EXPECT_EQ(fingerprint(build_catalog("N5+R1")), (Fingerprint{6, 1, 2, 3, 'n'}));
  EXPECT_EQ(fingerprint(heis3c()), (Fingerprint{6, 0, 2, 4, '-'}));
  EXPECT_EQ(fingerprint(build_catalog("heis1+heis1")).disc, '+');
  EXPECT_EQ(fingerprint(n6()).disc, '0');
  EXPECT_EQ(fingerprint(heis3c()).str(), "(6, 0, (2,4), -)");
}

TEST(Classify, TableEntriesArePairwiseDistinctAndSelfClassify) {
  std::set<std::string> seen;
  const auto& names = table_names();
  ASSERT_EQ(names.size(), 12u);
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto a = build_catalog(names[i]);
    const auto c = classify_dim_le6(a);
    EXPECT_EQ(c.kind, Classification::Kind::Named);
    EXPECT_EQ(c.name, names[i]);
    for (std::size_t j = i + 1; j < names.size(); ++j)
      EXPECT_FALSE(fingerprint(a) == fingerprint(build_catalog(names[j]))) << names[i] << " vs " << names[j];
  }
}

TEST(Classify, InvariantUnderBasisChange) {
  Rng rng(2024);
  for (const auto& name : table_names()) {
    const auto a = build_catalog(name);
    const auto fp = fingerprint(a);
    for (int t = 0; t < 50; ++t) {
      const auto b = nilpac::testing::random_basis_change(a, rng);
      EXPECT_EQ(fingerprint(b), fp) << name;
    }
  }
}

TEST(Classify, AbelianAndLimits) {
  EXPECT_EQ(classify_dim_le6(QAlgebra::abelian(6)).kind, Classification::Kind::Abelian);
  EXPECT_THROW(classify_dim_le6(quat(1)), DomainError);
  for (int k = 0; k <= 3; ++k) {
    const auto c = classify_dim_le6(direct_sum(heis(1), QAlgebra::abelian(k)));
    EXPECT_EQ(c.name, k == 0 ? "heis1" : "heis1+R" + std::to_string(k));
  }
}

TEST(Classify, RandomLowDimensionalSamplesAreNeverUnknown) {
  Rng rng(91);
  for (int t = 0; t < 200; ++t) {
    const int q = static_cast<int>(uniform_int(rng, 2, 4));
    const int p = static_cast<int>(uniform_int(rng, 1, 6 - q));
    auto a = QAlgebra::zero(q, p);
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        QVec zv(p);
        for (int k = 0; k < p; ++k) zv(k) = random_small(rng, 1);
        a.set_bracket(i, j, zv);
      }
    EXPECT_NE(classify_dim_le6(a).kind, Classification::Kind::Unknown);
  }
}

TEST(Catalog, DisplayNames) {
  EXPECT_EQ(display_name("heis1+R2"), "heis3(R) + R^2");
  EXPECT_EQ(display_name("N6prime"), "N6'");
  EXPECT_EQ(display_name("quat1"), "quat7(R)");
}
