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
#include "nilpac/analysis.hpp"

namespace nilpac {

/// heis_{2n+1}: basis X1, Y1, ..., Xn, Yn, Z with [Xi, Yi] = Z.
QAlgebra heis(int n);
/// Quaternionic Heisenberg algebra of dimension 4n + 3, basis
/// X1, Y1, V1, W1, ..., Z1, Z2, Z3; j(Z1), j(Z2), j(Z3) act as left
/// multiplication by i, j, k on each quaternionic coordinate.
QAlgebra quat(int n);
/// 15-dimensional octonionic Heisenberg algebra. The brackets are read off
/// the block matrices j(Z1)..j(Z7) via c^k_ij = (J^k)_ji.
QAlgebra oct();
/// [X1, X2] = Z1, [X1, X3] = Z2.
QAlgebra n5();
/// heis_3 over the dual numbers, basis X, Y, eps*Y, -eps*X, Z, eps*Z:
/// [X1, X2] = Z1, [X1, X3] = Z2, [X2, X4] = Z2.
QAlgebra n6();
/// Free 2-step algebra on three generators: [X1, X2] = Z3, [X2, X3] = Z1,
/// [X3, X1] = Z2.
QAlgebra n6prime();
/// heis_3(C) realified over X, iX, Y, iY, Z, iZ.
QAlgebra heis3c();

/// The seven j-matrices of oct() exactly as displayed in its definition.
std::vector<QMat> oct_j_matrices();

/// Builds "heis<n>", "quat<n>", "oct", "N5", "N6", "N6prime", "heis3C",
/// "R<k>", and "+"-joined direct sums of these. Throws DomainError for
/// unknown names.
QAlgebra build_catalog(const std::string& name);

/// The twelve non-abelian algebras of dimension at most 6, in table order.
const std::vector<std::string>& table_names();
/// Every name the `catalog` listing emits.
const std::vector<std::string>& catalog_names();
/// Human-readable form of a table or catalog name, e.g. "heis3(R)+R^2".
std::string display_name(const std::string& name);

/// heis1, quat1 or oct presented with [X1, Xi] = Z_{i-1} for i = 2..q.
/// For these three the defining bases already have this property, so the
/// relabeling is the identity; it is verified before returning.
QAlgebra base_normalized(const std::string& name);

/// Pf(sum_k z_k J^k). Requires q even and commutator ideal equal to Z.
QMultiPoly pfaffian_pencil(const QAlgebra& a);

struct Fingerprint {
  int dim = 0;
  int k = 0;        // abelian factor
  int p_core = 0;   // commutator ideal
  int q_core = 0;
  char disc = 'n';  // '+', '0', '-' for core type (2,4), 'n' otherwise

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

/// The discriminant sign is a basis-change invariant: a change of V scales
/// the Pfaffian by a determinant and a change of Z substitutes linearly in
/// the binary quadratic, each multiplying the discriminant by a square.
Fingerprint fingerprint(const QAlgebra& a);

struct Classification {
  enum class Kind { Named, Abelian, Unknown };
  Kind kind = Kind::Unknown;
  std::string name;  // table name when kind == Named
};

/// Throws DomainError when dim > 6.
Classification classify_dim_le6(const QAlgebra& a);

}  // namespace nilpac
