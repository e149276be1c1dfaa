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
#include <variant>

#include "nilpac/algebra.hpp"
#include "nilpac/scalar.hpp"

namespace nilpac {

/// Structure-constant document:
///   {"field": "Q" | "Q(t)", "q": int, "p": int,
///    "brackets": [{"i": int, "j": int, "z": [scalar text, ...]}, ...],
///    "label": text}
/// Indices are 1-based with i < j; only nonzero pairs are written, in
/// (i, j) order, and "label" is omitted when empty. The writer is the
/// canonical form, so parse followed by write reproduces it byte for byte.
template <class F>
std::string write_algebra_json(const TwoStepAlgebra<F>& a);

using AnyAlgebra = std::variant<QAlgebra, TwoStepAlgebra<RatFun>>;

/// Throws ParseError with the offending field or index pair named.
AnyAlgebra read_algebra_json(std::string_view text);
/// Same, but requires field "Q".
QAlgebra read_q_algebra_json(std::string_view text);

/// {"field": "Q", "matrix": [[scalar text, ...], ...]} with rows listed in
/// order.
std::string write_matrix_json(const QMat& m);
QMat read_matrix_json(std::string_view text);

/// "v1,...,vq;z1,...,zp" in exponential coordinates.
std::string format_group_element(const QVec& x, int q);
QVec parse_group_element(std::string_view text, int q, int p);

}  // namespace nilpac
