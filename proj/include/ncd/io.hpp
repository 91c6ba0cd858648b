// Copyright 2026 The ncdomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCD_IO_HPP
#define NCD_IO_HPP

#include <string>

#include <json.hpp>

#include "ncd/fock.hpp"
#include "ncd/linalg.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

using Json = nlohmann::ordered_json;

/// "p/q", an integer, or a decimal such as "0.125" or "1e-2", read exactly.
Rational parse_rational(const std::string& text);

/// {rows, cols, aux_dim, data: [[re, im], ...]} in row-major order.
Json matrix_to_json(const Matrix& m, int aux_dim = 1);
Matrix matrix_from_json(const Json& j, int* aux_dim = nullptr);

Json operator_to_json(const TruncatedOperator& t);
/// The alphabet size comes from the caller; N is inferred from the dimension.
TruncatedOperator operator_from_json(const Json& j, int n);

/// {aux_dim, A: [{word, block}], B: [...]} with blocks as nested rows of [re, im].
Json symbol_to_json(const MultiToeplitzSymbol& s);
MultiToeplitzSymbol symbol_from_json(const Json& j);

/// {n, dim, matrices: [matrix, ...]}.
Json tuple_to_json(const OperatorTuple& x);
OperatorTuple tuple_from_json(const Json& j);

/// {n, m, coefficients: [{word: [1, 2], value: "1/2"}]} or {n, m, kind: "hyperball"}.
Json spec_to_json(const DomainSpec& spec);
DomainSpec spec_from_json(const Json& j);

/// Throws ValidationError when the file is missing or not valid JSON.
Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace ncd

#endif  // NCD_IO_HPP
