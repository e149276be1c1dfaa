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
#include <functional>
#include <optional>
#include <utility>

#include "nilpac/algebra.hpp"
#include "nilpac/sampling.hpp"

namespace nilpac {

/// Element of the simply connected group of a 2-step algebra, stored in
/// exponential coordinates: exp and log act as the identity on the data.
template <class F>
struct GroupElement {
  Vec<F> log;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.log == b.log; }
};

template <class F>
GroupElement<F> group_identity(const TwoStepAlgebra<F>& a) {
  return {Vec<F>::Zero(a.dim())};
}

namespace detail {
template <class F>
void check_member(const TwoStepAlgebra<F>& a, const GroupElement<F>& g) {
  if (g.log.size() != a.dim()) throw DomainError("group element does not belong to this algebra");
}
}  // namespace detail

/// exp(x) exp(y) = exp(x + y + [x, y] / 2); exact because [x, [x, y]] = 0.
template <class F>
GroupElement<F> gmul(const TwoStepAlgebra<F>& a, const GroupElement<F>& g, const GroupElement<F>& h) {
  detail::check_member(a, g);
  detail::check_member(a, h);
  static const F half = F(1) / F(2);
  return {g.log + h.log + half * a.bracket(g.log, h.log)};
}

template <class F>
GroupElement<F> ginv(const TwoStepAlgebra<F>& a, const GroupElement<F>& g) {
  detail::check_member(a, g);
  return {-g.log};
}

/// g h g^-1 h^-1, whose log equals [log g, log h].
template <class F>
GroupElement<F> gcommutator(const TwoStepAlgebra<F>& a, const GroupElement<F>& g, const GroupElement<F>& h) {
  return gmul(a, gmul(a, gmul(a, g, h), ginv(a, g)), ginv(a, h));
}

template <class F>
struct TransportResult {
  bool ok = true;
  int trials = 0;
  /// First pair with F(gh) != F(g)F(h).
  std::optional<std::pair<Vec<F>, Vec<F>>> counterexample;
};

/// Randomized check that F = exp o f o log is multiplicative on sampled
/// pairs, i.e. a necessary condition for f to be a Lie ring homomorphism.
template <class F>
TransportResult<F> transport_check(const TwoStepAlgebra<F>& a, const TwoStepAlgebra<F>& b,
                                   const std::function<Vec<F>(const Vec<F>&)>& f, int trials,
                                   std::uint64_t seed) {
  TransportResult<F> out;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const GroupElement<F> g{random_vector<F>(rng, a.dim())}, h{random_vector<F>(rng, a.dim())};
    const GroupElement<F> lhs{f(gmul(a, g, h).log)};
    const GroupElement<F> rhs = gmul(b, GroupElement<F>{f(g.log)}, GroupElement<F>{f(h.log)});
    ++out.trials;
    if (!(lhs == rhs)) {
      out.ok = false;
      out.counterexample = std::make_pair(g.log, h.log);
      return out;
    }
  }
  return out;
}

}  // namespace nilpac
