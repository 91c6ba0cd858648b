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

#include "ncd/fock.hpp"

#include <algorithm>
#include <cmath>

#include "ncd/errors.hpp"

namespace ncd {

FockBasis::FockBasis(int n, int N)
    : n_(n), N_(N), words_(std::make_shared<const std::vector<Word>>(enumerate_words(n, N))) {}

std::optional<std::size_t> FockBasis::index(const Word& w) const {
    if (static_cast<int>(w.length()) > N_) return std::nullopt;
    return word_index(w, n_);
}

TruncatedOperator::TruncatedOperator(FockBasis b, int aux, Matrix m)
    : basis(std::move(b)), aux_dim(aux), matrix(std::move(m)) {
    if (aux_dim < 1) throw DimensionMismatch("operator: aux_dim must be >= 1");
    const Eigen::Index size = basis.dim() * aux_dim;
    if (matrix.rows() != size || matrix.cols() != size)
        throw DimensionMismatch("operator: matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " + std::to_string(size));
}

TruncatedOperator TruncatedOperator::identity(const FockBasis& b, int aux) {
    return {b, aux, Matrix::Identity(b.dim() * aux, b.dim() * aux)};
}

TruncatedOperator TruncatedOperator::zero(const FockBasis& b, int aux) {
    return {b, aux, Matrix::Zero(b.dim() * aux, b.dim() * aux)};
}

Matrix TruncatedOperator::block(std::size_t omega, std::size_t gamma) const {
    const auto d = static_cast<Eigen::Index>(aux_dim);
    return matrix.block(static_cast<Eigen::Index>(omega) * d, static_cast<Eigen::Index>(gamma) * d, d, d);
}

void TruncatedOperator::set_block(std::size_t omega, std::size_t gamma, const Matrix& value) {
    const auto d = static_cast<Eigen::Index>(aux_dim);
    matrix.block(static_cast<Eigen::Index>(omega) * d, static_cast<Eigen::Index>(gamma) * d, d, d) = value;
}

TruncatedOperator TruncatedOperator::adjoint() const { return {basis, aux_dim, matrix.adjoint()}; }

namespace {

void require_compatible(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (!(a.basis == b.basis) || a.aux_dim != b.aux_dim) throw DimensionMismatch("operators live on different spaces");
}

}  // namespace

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_compatible(a, b);
    return {a.basis, a.aux_dim, a.matrix + b.matrix};
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_compatible(a, b);
    return {a.basis, a.aux_dim, a.matrix - b.matrix};
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_compatible(a, b);
    return {a.basis, a.aux_dim, a.matrix * b.matrix};
}

TruncatedOperator operator*(Complex s, const TruncatedOperator& a) { return {a.basis, a.aux_dim, s * a.matrix}; }

TruncatedOperator tensor_coefficient(const Matrix& coefficient, const TruncatedOperator& fock_op) {
    if (fock_op.aux_dim != 1) throw DimensionMismatch("tensor_coefficient: expects a scalar-basis operator");
    if (coefficient.rows() != coefficient.cols()) throw DimensionMismatch("tensor_coefficient: square blocks only");
    return {fock_op.basis, static_cast<int>(coefficient.rows()), kron(fock_op.matrix, coefficient)};
}

namespace {

void check_creation_args(const WeightTable& table, int i, int N) {
    if (i < 1 || i > table.n()) throw std::invalid_argument("creation operator: letter out of range");
    if (N > table.max_length()) throw TruncationExceeded("creation operator: N exceeds the weight table");
}

}  // namespace

TruncatedOperator weighted_left_creation(const WeightTable& table, int i, int N) {
    check_creation_args(table, i, N);
    FockBasis basis(table.n(), N);
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    const Word gi = Word::generator(i);
    for (std::size_t col = 0; col < basis.words().size(); ++col) {
        const Word& gamma = basis.word(col);
        if (static_cast<int>(gamma.length()) >= N) continue;
        const Word target = concat(gi, gamma);
        m(static_cast<Eigen::Index>(*basis.index(target)), static_cast<Eigen::Index>(col)) = table.sqrt_ratio(gamma, target);
    }
    return {basis, 1, std::move(m)};
}

TruncatedOperator weighted_right_creation(const WeightTable& table, int i, int N) {
    check_creation_args(table, i, N);
    FockBasis basis(table.n(), N);
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    const Word gi = Word::generator(i);
    for (std::size_t col = 0; col < basis.words().size(); ++col) {
        const Word& gamma = basis.word(col);
        if (static_cast<int>(gamma.length()) >= N) continue;
        const Word target = concat(gamma, gi);
        m(static_cast<Eigen::Index>(*basis.index(target)), static_cast<Eigen::Index>(col)) = table.sqrt_ratio(gamma, target);
    }
    return {basis, 1, std::move(m)};
}

std::vector<TruncatedOperator> left_creation_tuple(const WeightTable& table, int N) {
    std::vector<TruncatedOperator> out;
    for (int i = 1; i <= table.n(); ++i) out.push_back(weighted_left_creation(table, i, N));
    return out;
}

std::vector<TruncatedOperator> right_creation_tuple(const WeightTable& table, int N) {
    std::vector<TruncatedOperator> out;
    for (int i = 1; i <= table.n(); ++i) out.push_back(weighted_right_creation(table, i, N));
    return out;
}

TruncatedOperator word_operator(const std::vector<TruncatedOperator>& ops, const Word& alpha) {
    if (ops.empty()) throw std::invalid_argument("word_operator: empty operator tuple");
    for (const auto& op : ops) require_compatible(op, ops.front());
    TruncatedOperator out = TruncatedOperator::identity(ops.front().basis, ops.front().aux_dim);
    for (Letter l : alpha.letters()) {
        if (l < 1 || l > ops.size()) throw std::invalid_argument("word_operator: letter outside the tuple");
        out.matrix = out.matrix * ops[l - 1u].matrix;
    }
    return out;
}

OperatorTuple as_tuple(const std::vector<TruncatedOperator>& ops) {
    std::vector<Matrix> ms;
    ms.reserve(ops.size());
    for (const auto& op : ops) ms.push_back(op.matrix);
    return OperatorTuple(std::move(ms));
}

TruncatedOperator vacuum_projection(const FockBasis& b) {
    TruncatedOperator p = TruncatedOperator::zero(b);
    p.matrix(0, 0) = 1.0;
    return p;
}

namespace {

double off_diagonal_max(const Matrix& m) {
    double worst = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

}  // namespace

ModelIdentityReport verify_model_identities(const DomainSpec& spec, const WeightTable& table, int N, double tol) {
    (void)tol;
    ModelIdentityReport rep;
    const FockBasis basis(table.n(), N);
    const Matrix pc = vacuum_projection(basis).matrix;

    const auto left = left_creation_tuple(table, N);
    const auto right = right_creation_tuple(table, N);
    const OperatorTuple w = as_tuple(left);
    const OperatorTuple lam = as_tuple(right);
    const DomainSpec rev = spec.reversed();

    rep.defect_residual = max_abs(defect_operator(spec, w, spec.m) - pc);
    rep.phi_max_eigenvalue = max_eigenvalue(cp_map_apply(spec, w, Matrix::Identity(basis.dim(), basis.dim())));
    rep.defect_residual_right = max_abs(defect_operator(rev, lam, spec.m) - pc);
    rep.phi_max_eigenvalue_right = max_eigenvalue(cp_map_apply(rev, lam, Matrix::Identity(basis.dim(), basis.dim())));

    for (int i = 0; i < table.n(); ++i) {
        for (int j = 0; j < table.n(); ++j) {
            const Matrix comm = left[i].matrix * right[j].matrix - right[j].matrix * left[i].matrix;
            for (std::size_t col = 0; col < basis.words().size(); ++col) {
                if (static_cast<int>(basis.word(col).length()) > N - 2) break;
                rep.commutation_residual =
                    std::max(rep.commutation_residual, comm.col(static_cast<Eigen::Index>(col)).norm());
            }
        }
    }

    Matrix phi_power = Matrix::Identity(basis.dim(), basis.dim());
    for (int p = 1; p <= N + 1; ++p) {
        phi_power = cp_map_apply(spec, w, phi_power);
        if (p <= spec.m) rep.off_diagonal_mass = std::max(rep.off_diagonal_mass, off_diagonal_max(phi_power));
        rep.purity_decay.push_back(operator_norm(phi_power));
    }
    return rep;
}

std::pair<TruncatedOperator, ConjugationReport> weighted_space_conjugation(const WeightTable& table, int N) {
    const FockBasis basis(table.n(), N);
    ConjugationReport rep;
    rep.diagonal.resize(basis.dim());
    for (Eigen::Index k = 0; k < basis.dim(); ++k)
        rep.diagonal(k) = std::sqrt(table(basis.word(static_cast<std::size_t>(k))).get_d());

    Matrix u = rep.diagonal.cast<Complex>().asDiagonal();
    Matrix u_inv = rep.diagonal.cwiseInverse().cast<Complex>().asDiagonal();
    for (int i = 1; i <= table.n(); ++i) {
        const Matrix conj = u * weighted_left_creation(table, i, N).matrix * u_inv;
        const Word gi = Word::generator(i);
        for (std::size_t col = 0; col < basis.words().size(); ++col) {
            const Word& gamma = basis.word(col);
            if (static_cast<int>(gamma.length()) >= N) break;
            Vector expected = Vector::Zero(basis.dim());
            expected(static_cast<Eigen::Index>(*basis.index(concat(gi, gamma)))) = 1.0;
            rep.shift_residual = std::max(rep.shift_residual, (conj.col(static_cast<Eigen::Index>(col)) - expected).norm());
        }
    }
    return {TruncatedOperator(basis, 1, std::move(u)), std::move(rep)};
}

}  // namespace ncd
