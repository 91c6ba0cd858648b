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

#ifndef NCD_FOCK_HPP
#define NCD_FOCK_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ncd/linalg.hpp"
#include "ncd/weights.hpp"
#include "ncd/words.hpp"

namespace ncd {

/// span{e_alpha : |alpha| <= N} inside the full Fock space on n generators.
class FockBasis {
public:
    FockBasis(int n, int N);

    int n() const noexcept { return n_; }
    int max_length() const noexcept { return N_; }
    Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(words_->size()); }
    const std::vector<Word>& words() const noexcept { return *words_; }
    const Word& word(std::size_t i) const { return (*words_)[i]; }
    /// Index of w, or nullopt when |w| > N.
    std::optional<std::size_t> index(const Word& w) const;

    friend bool operator==(const FockBasis& a, const FockBasis& b) { return a.n_ == b.n_ && a.N_ == b.N_; }

private:
    int n_;
    int N_;
    std::shared_ptr<const std::vector<Word>> words_;
};

/// Dense matrix of an operator on span{e_alpha} (x) C^aux_dim.
///
/// Row/column index of e_alpha (x) e_a is index(alpha) * aux_dim + a, so the
/// (omega, gamma) block is the aux_dim x aux_dim matrix C_{omega,gamma} with
/// <T(x (x) e_gamma), y (x) e_omega> = <C_{omega,gamma} x, y>. In this layout
/// the operator A (x) W of the coefficient-space convention is kron(W, A).
struct TruncatedOperator {
    FockBasis basis;
    int aux_dim = 1;
    Matrix matrix;

    TruncatedOperator(FockBasis b, int aux, Matrix m);
    static TruncatedOperator identity(const FockBasis& b, int aux = 1);
    static TruncatedOperator zero(const FockBasis& b, int aux = 1);

    Matrix block(std::size_t omega, std::size_t gamma) const;
    void set_block(std::size_t omega, std::size_t gamma, const Matrix& value);

    TruncatedOperator adjoint() const;
};

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator*(Complex s, const TruncatedOperator& a);

/// A (x) T for a scalar-basis T: kron(T, A) in the block layout.
TruncatedOperator tensor_coefficient(const Matrix& coefficient, const TruncatedOperator& fock_op);

/// Compression of W_i: e_gamma -> sqrt(b_gamma / b_{g_i gamma}) e_{g_i gamma}, zero on |gamma| = N.
TruncatedOperator weighted_left_creation(const WeightTable& table, int i, int N);
/// Compression of Lambda_i: e_gamma -> sqrt(b_gamma / b_{gamma g_i}) e_{gamma g_i}.
TruncatedOperator weighted_right_creation(const WeightTable& table, int i, int N);

std::vector<TruncatedOperator> left_creation_tuple(const WeightTable& table, int N);
std::vector<TruncatedOperator> right_creation_tuple(const WeightTable& table, int N);

/// Ordered product ops[i_1] ... ops[i_k]; identity for the empty word.
TruncatedOperator word_operator(const std::vector<TruncatedOperator>& ops, const Word& alpha);

OperatorTuple as_tuple(const std::vector<TruncatedOperator>& ops);

/// Orthogonal projection onto C e_{g0}.
TruncatedOperator vacuum_projection(const FockBasis& b);

struct ModelIdentityReport {
    double defect_residual = 0;           // max |(id - Phi_{q,W})^m(I) - P_C|
    double phi_max_eigenvalue = 0;        // of Phi_{q,W}(I)
    double defect_residual_right = 0;     // same with Lambda and q~
    double phi_max_eigenvalue_right = 0;
    double commutation_residual = 0;      // max ||(W_i L_j - L_j W_i) e_gamma||, |gamma| <= N-2
    double off_diagonal_mass = 0;         // largest off-diagonal entry among Phi^j(I), j <= m
    std::vector<double> purity_decay;     // ||Phi^p_{q,W}(I)|| for p = 1..N+1 (truncation nilpotence)

    bool passed(double tol) const {
        return defect_residual <= tol && phi_max_eigenvalue <= 1 + tol && defect_residual_right <= tol &&
               phi_max_eigenvalue_right <= 1 + tol && commutation_residual <= tol;
    }
};

ModelIdentityReport verify_model_identities(const DomainSpec& spec, const WeightTable& table, int N, double tol);

struct ConjugationReport {
    Eigen::VectorXd diagonal;        // sqrt(b_alpha)
    double shift_residual = 0;       // max over i of |U W_i U^{-1} - L_i| on |gamma| < N
};

/// The unitary e_alpha -> sqrt(b_alpha) Z_alpha onto the weighted Fock space, as a diagonal
/// matrix in the e_alpha / normalized-Z_alpha bases, with a check that it intertwines W_i and
/// the multiplication shift L_i.
std::pair<TruncatedOperator, ConjugationReport> weighted_space_conjugation(const WeightTable& table, int N);

}  // namespace ncd

#endif  // NCD_FOCK_HPP
