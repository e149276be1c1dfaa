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
#include <string_view>

#include <Eigen/Core>

#include "nilpac/dual.hpp"
#include "nilpac/multipoly.hpp"
#include "nilpac/quaternion.hpp"
#include "nilpac/rational.hpp"
#include "nilpac/ratfun.hpp"

namespace nilpac {

/// Text form and field tag for the coefficient domains an algebra can be
/// defined over.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name() { return "Q"; }
  static std::string format(const Rational& x) { return x.str(); }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct FieldTraits<RatFun> {
  static std::string name() { return "Q(t)"; }
  static std::string format(const RatFun& x) { return x.str(); }
  static RatFun parse(std::string_view s) { return RatFun::parse(s); }
};

}  // namespace nilpac

namespace Eigen {

namespace nilpac_detail {
template <class T>
struct ExactTraits : GenericNumTraits<T> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  // Exact types print in full; these only satisfy Eigen's stream output.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};
}  // namespace nilpac_detail

template <>
struct NumTraits<nilpac::Rational> : nilpac_detail::ExactTraits<nilpac::Rational> {};
template <>
struct NumTraits<nilpac::RatFun> : nilpac_detail::ExactTraits<nilpac::RatFun> {};
template <class F>
struct NumTraits<nilpac::MultiPoly<F>> : nilpac_detail::ExactTraits<nilpac::MultiPoly<F>> {};
template <class F>
struct NumTraits<nilpac::Dual<F>> : nilpac_detail::ExactTraits<nilpac::Dual<F>> {};
template <class F>
struct NumTraits<nilpac::Quaternion<F>> : nilpac_detail::ExactTraits<nilpac::Quaternion<F>> {};

}  // namespace Eigen
