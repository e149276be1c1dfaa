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
#include <random>

#include "nilpac/rational.hpp"

namespace nilpac {

/// SplitMix64 finalizer; used to derive independent per-index seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Uniform on [-bound, bound] minus {0}.
inline long nonzero_int(Rng& rng, long bound) {
  long v = uniform_int(rng, -bound, bound - 1);
  return v >= 0 ? v + 1 : v;
}

/// Nonzero integer in [-bound, bound] over a denominator in [1, bound].
inline Rational random_rational(Rng& rng, long bound) {
  const long num = nonzero_int(rng, bound);
  const long den = uniform_int(rng, 1, bound);
  return Rational(mpz_class(num), mpz_class(den));
}

/// Small integer in [-bound, bound], zero allowed.
inline Rational random_small(Rng& rng, long bound) { return Rational(uniform_int(rng, -bound, bound)); }

}  // namespace nilpac
