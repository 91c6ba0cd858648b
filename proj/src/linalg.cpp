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

#include "ncd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "ncd/errors.hpp"

namespace ncd {

OperatorTuple::OperatorTuple(std::vector<Matrix> matrices) : ops(std::move(matrices)) {
    for (const auto& m : ops)
        if (m.rows() != m.cols() || m.rows() != ops.front().rows())
            throw DimensionMismatch("operator tuple: matrices must be square with a common size");
}

OperatorTuple OperatorTuple::zero(int n, Eigen::Index dim) {
    return OperatorTuple(std::vector<Matrix>(static_cast<std::size_t>(n), Matrix::Zero(dim, dim)));
}

OperatorTuple OperatorTuple::scaled(double s) const {
    OperatorTuple out = *this;
    for (auto& m : out.ops) m *= s;
    return out;
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Eigen::VectorXd hermitian_eigenvalues(const Matrix& a) {
    const Matrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double min_eigenvalue(const Matrix& hermitian) {
    const auto ev = hermitian_eigenvalues(hermitian);
    return ev.size() ? ev(0) : 0.0;
}

double max_eigenvalue(const Matrix& hermitian) {
    const auto ev = hermitian_eigenvalues(hermitian);
    return ev.size() ? ev(ev.size() - 1) : 0.0;
}

Matrix psd_sqrt(const Matrix& hermitian, double clip) {
    const Matrix h = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -clip) throw DomainError("psd_sqrt: eigenvalue " + std::to_string(ev(i)) + " below -tol");
        ev(i) = ev(i) < 0 ? 0.0 : std::sqrt(ev(i));
    }
    return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double spectral_radius(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    Eigen::ComplexEigenSolver<Matrix> es(a, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<Matrix> word_products(const OperatorTuple& x, int max_len) {
    const int n = x.n();
    const std::size_t count = word_count(n, max_len);
    std::vector<Matrix> out(count);
    out[0] = Matrix::Identity(x.dim(), x.dim());
    for (std::size_t idx = 1; idx < count; ++idx) {
        const Word w = word_at(idx, n);
        const Word tail = w.slice(1, w.length() - 1);
        out[idx] = x[w[0] - 1u] * out[word_index(tail, n)];
    }
    return out;
}

Matrix word_product(const OperatorTuple& x, const Word& w) {
    Matrix out = Matrix::Identity(x.dim(), x.dim());
    for (Letter l : w.letters()) {
        if (l < 1 || l > x.n()) throw std::invalid_argument("word_product: letter outside the tuple");
        out = out * x[l - 1u];
    }
    return out;
}

Matrix cp_map_apply(const DomainSpec& spec, const OperatorTuple& x, const Matrix& y) {
    if (x.n() != spec.n) throw DimensionMismatch("cp_map: tuple length differs from n");
    if (y.rows() != x.dim() || y.cols() != x.dim()) throw DimensionMismatch("cp_map: Y has the wrong size");
    Matrix out = Matrix::Zero(y.rows(), y.cols());
    for (const auto& [w, a] : spec.coefficients) {
        if (a == 0 || w.empty()) continue;
        const Matrix xw = word_product(x, w);
        out += a.get_d() * (xw * y * xw.adjoint());
    }
    return out;
}

Matrix defect_operator(const DomainSpec& spec, const OperatorTuple& x, int k) {
    if (k < 1) throw std::invalid_argument("defect_operator: k must be >= 1");
    Matrix y = Matrix::Identity(x.dim(), x.dim());
    for (int j = 0; j < k; ++j) y = y - cp_map_apply(spec, x, y);
    return 0.5 * (y + y.adjoint());
}

}  // namespace ncd
