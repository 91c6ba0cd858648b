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

#ifndef NCD_GENERATORS_HPP
#define NCD_GENERATORS_HPP

#include <random>

#include "ncd/berezin.hpp"
#include "ncd/linalg.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

using Rng = std::mt19937_64;

/// Positive regular polynomial of degree <= max_degree with small rational coefficients.
DomainSpec random_spec(int n, int m, int max_degree, Rng& rng);

/// Gaussian blocks on a random subset of words of length <= max_len (the empty word always present).
MultiToeplitzSymbol random_symbol(int n, int max_len, int aux_dim, bool analytic, Rng& rng, double density = 0.6);

/// Strictly upper-triangular k x k matrices: jointly nilpotent of order <= k.
OperatorTuple random_nilpotent_tuple(int n, int k, Rng& rng);

/// Gaussian k x k matrices.
OperatorTuple random_tuple(int n, int k, Rng& rng);

/// fraction * sup{s : sX in the domain}, the supremum located by bisection.
OperatorTuple scale_into_domain(const DomainSpec& spec, const OperatorTuple& x, double fraction = 0.9);

/// sX with r_f(sX) = target, located by bisection.
OperatorTuple scale_to_spectral_radius(const DomainSpec& spec, const OperatorTuple& x, double target);

HereditaryPolynomial random_hereditary(int n, int max_degree, int terms, Rng& rng);

}  // namespace ncd

#endif  // NCD_GENERATORS_HPP
