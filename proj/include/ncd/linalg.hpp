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

#ifndef NCD_LINALG_HPP
#define NCD_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "ncd/weights.hpp"
#include "ncd/words.hpp"

namespace ncd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// An n-tuple of k x k complex matrices.
struct OperatorTuple {
    std::vector<Matrix> ops;

    OperatorTuple() = default;
    explicit OperatorTuple(std::vector<Matrix> matrices);
    static OperatorTuple zero(int n, Eigen::Index dim);

    int n() const noexcept { return static_cast<int>(ops.size()); }
    Eigen::Index dim() const noexcept { return ops.empty() ? 0 : ops.front().rows(); }
    const Matrix& operator[](std::size_t i) const { return ops[i]; }

    OperatorTuple scaled(double s) const;
};

/// Largest singular value.
double operator_norm(const Matrix& a);
double max_abs(const Matrix& a);
/// Eigenvalues of the hermitian part (a + a^*)/2, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& a);
double min_eigenvalue(const Matrix& hermitian);
double max_eigenvalue(const Matrix& hermitian);
/// Principal square root of a hermitian matrix; eigenvalues in [-clip, 0) are set to 0.
Matrix psd_sqrt(const Matrix& hermitian, double clip);
/// Kronecker product, a-major: (a (x) b)[i*rb + k, j*cb + l] = a[i,j] b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);
double spectral_radius(const Matrix& a);

/// X_w for every word w of length <= max_len, indexed canonically. X_{g0} = I.
std::vector<Matrix> word_products(const OperatorTuple& x, int max_len);
/// X_{i_1} ... X_{i_k}.
Matrix word_product(const OperatorTuple& x, const Word& w);

/// Phi_{q,X}(Y) = sum a_alpha X_alpha Y X_alpha^*.
Matrix cp_map_apply(const DomainSpec& spec, const OperatorTuple& x, const Matrix& y);
/// (id - Phi_{q,X})^k (I).
Matrix defect_operator(const DomainSpec& spec, const OperatorTuple& x, int k);

}  // namespace ncd

#endif  // NCD_LINALG_HPP
