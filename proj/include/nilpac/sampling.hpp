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

#include "nilpac/linalg.hpp"
#include "nilpac/random.hpp"

namespace nilpac {

/// Seeded random scalars for property checks.
template <class F>
struct ScalarSampler;

template <>
struct ScalarSampler<Rational> {
  static Rational draw(Rng& rng, long bound = 9) { return random_rational(rng, bound); }
};

/// Ratio of a polynomial of degree <= 2 and a monic one of degree <= 1.
template <>
struct ScalarSampler<RatFun> {
  static RatFun draw(Rng& rng, long bound = 9) {
    std::vector<Rational> num;
    const int deg = static_cast<int>(uniform_int(rng, 0, 2));
    for (int k = 0; k <= deg; ++k) num.push_back(random_small(rng, bound));
    if (num.back().is_zero()) num.back() = Rational(1);
    QPoly den(1);
    if (uniform_int(rng, 0, 1) == 1) den = QPoly({random_small(rng, bound), Rational(1)});
    return RatFun(QPoly(std::move(num)), den);
  }
};

template <class F>
Vec<F> random_vector(Rng& rng, Eigen::Index n, long bound = 9) {
  Vec<F> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = ScalarSampler<F>::draw(rng, bound);
  return v;
}

}  // namespace nilpac
