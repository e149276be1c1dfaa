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
#include "nilpac/multipoly.hpp"

namespace nilpac {

/// Criterion for partial automatic continuity: the commutator ideal equals
/// the center and some Y1 in V has [Y1, V] of dimension q - 1. Then
/// ker ad_{Y1}|V = span{Y1} and any complement Y2..Yq gives independent
/// brackets [Y1, Yj].
struct SufficientCondition {
  enum class Kind { Holds, FailsProven, FailsProbabilistic };
  Kind kind = Kind::FailsProven;
  bool commutator_is_center = false;
  int max_rank = 0;  // generic rank of ad_Y|V as Y ranges over V
  int trials = 0;    // random substitutions on the probabilistic path
  /// Holds: columns Y1..Yq in V coordinates, re-verified.
  QMat basis;
  std::string reason;
};

/// p x q matrix of ad_Y|V with Y = y1 e1 + ... + yq eq symbolic.
Mat<QMultiPoly> symbolic_ad_matrix(const QAlgebra& a);

/// `trials` bounds the random substitutions of the generic-rank fallback.
SufficientCondition sufficient_condition(const QAlgebra& a, std::uint64_t seed = 0, int trials = 32);

/// Determinant test on the (q-1) x (q-1) block of ad_{e1} restricted to
/// span{e2..eq}, taking rows Z1..Z_{q-1}. Throws DomainError when p < q - 1.
bool genericity_member(const QAlgebra& a);
/// Same test on an explicit choice of q - 1 distinct Z rows (0-based).
bool genericity_member(const QAlgebra& a, const std::vector<int>& rows);

/// Bracket tensor with entries n/d, n in [-bound, bound] \ {0},
/// d in [1, bound]; the label records the seed.
QAlgebra random_tensor(int p, int q, long bound, std::uint64_t seed);

struct ScanReport {
  int p = 0, q = 0, samples = 0;
  std::uint64_t seed = 0;
  long bound = 0;
  int surjective = 0;           // commutator ideal is all of Z
  std::optional<int> in_o;      // genericity_member true; absent when p < q - 1
  int in_o_and_surjective = 0;
  int holds = 0;
  int fails_proven = 0;
  int fails_probabilistic = 0;
  int violations = 0;           // in O, surjective, yet the criterion fails
  int in_o_not_holds = 0;       // in O and the criterion fails, surjective or not
};

/// Per-sample seeds are derive_seed(seed, index), so the report does not
/// depend on `threads`. Throws DomainError unless 1 <= p <= q(q-1)/2,
/// samples >= 1 and bound >= 1.
ScanReport scan(int p, int q, int samples, std::uint64_t seed, long bound, int threads = 1);

struct PacVerdict {
  enum class Status { Proven, NotPac, Unknown };
  Status status = Status::Unknown;
  /// "sufficient-condition", "table-1-classification", "theorem-C-family",
  /// "N6-isomorphic", "abelian", or empty for Unknown.
  std::string reason;
  std::string name;  // classification or family name when relevant
  bool probabilistic = false;
  int trials = 0;
  SufficientCondition condition;
  std::vector<std::string> checks;  // what was tried, in order
};

std::string status_text(PacVerdict::Status s);
std::string kind_text(SufficientCondition::Kind k);

/// heis(n), quat(n) or oct with exactly these structure constants, if any.
std::optional<std::string> rank_one_family_match(const QAlgebra& a);

PacVerdict pac_verdict(const QAlgebra& a, std::uint64_t seed = 0, int trials = 32);

}  // namespace nilpac
