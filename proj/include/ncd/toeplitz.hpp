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

#ifndef NCD_TOEPLITZ_HPP
#define NCD_TOEPLITZ_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncd/fock.hpp"
#include "ncd/linalg.hpp"
#include "ncd/weights.hpp"
#include "ncd/words.hpp"

namespace ncd {

/// Finitely supported Fourier data of phi(W) = sum B_(a) (x) W_a^* + A_(0) (x) I + sum A_(a) (x) W_a.
struct MultiToeplitzSymbol {
    int aux_dim = 1;
    std::map<Word, Matrix> A;  // may contain the empty word
    std::map<Word, Matrix> B;  // nonempty words only

    /// Throws ValidationError on a block of the wrong size or B at the empty word.
    void validate() const;
    std::size_t support_length() const;
    bool analytic() const { return B.empty(); }

    /// Single scalar term helpers.
    static MultiToeplitzSymbol constant(Complex c);
    static MultiToeplitzSymbol monomial(const Word& alpha, Complex c);

    /// (sum ||A_(a)||_F^2 / b_a, sum ||B_(a)||_F^2 / b_a).
    std::pair<double, double> summability(const WeightTable& table) const;
};

/// Block of a symbol, zero when absent.
Matrix symbol_block(const std::map<Word, Matrix>& part, const Word& w, int aux_dim);

MultiToeplitzSymbol operator+(const MultiToeplitzSymbol& a, const MultiToeplitzSymbol& b);
MultiToeplitzSymbol operator*(Complex s, const MultiToeplitzSymbol& a);
/// Symbol of phi(W)^*.
MultiToeplitzSymbol symbol_adjoint(const MultiToeplitzSymbol& s);
/// Coefficients of F1 F2 for analytic symbols (Cauchy product over concatenation).
MultiToeplitzSymbol symbol_product(const MultiToeplitzSymbol& f1, const MultiToeplitzSymbol& f2);
/// Drops blocks with Frobenius norm <= tol.
MultiToeplitzSymbol pruned(const MultiToeplitzSymbol& s, double tol);
/// Largest Frobenius distance between corresponding blocks, missing blocks read as zero.
double symbol_distance(const MultiToeplitzSymbol& a, const MultiToeplitzSymbol& b);

struct ToeplitzReport {
    bool is_toeplitz = true;
    double worst_structure_residual = 0;
    double worst_incomparable_entry = 0;
    double scale = 0;  // largest block norm of T
    std::string structure_witness;
    std::string incomparable_witness;
};

/// Weighted right multi-Toeplitz test on the truncation. Shift relations are checked on
/// pairs with |omega|, |gamma| <= N-1; zero blocks at incomparable pairs on all pairs.
/// Residuals are Frobenius block norms; acceptance is residual <= tol * max(scale, 1).
ToeplitzReport is_multi_toeplitz(const TruncatedOperator& t, const WeightTable& table, double tol = 1e-10);

MultiToeplitzSymbol fourier_coefficients(const TruncatedOperator& t, const WeightTable& table, int max_order);

/// phi(rW) compressed to words of length <= N. Throws TruncationExceeded when the
/// support is longer than N or than the weight table.
TruncatedOperator symbol_to_operator(const MultiToeplitzSymbol& sym, const WeightTable& table, double r, int N);

struct NormProfile {
    std::vector<double> radii;
    std::vector<double> norms;          // lower bounds of the untruncated norms
    bool monotone = true;
    double worst_violation = 0;         // max of norms[j] - norms[j+1]
    double sup_estimate = 0;            // max(last norm, linear extrapolation to r = 1)
};

NormProfile norm_profile(const MultiToeplitzSymbol& sym, const WeightTable& table, const std::vector<double>& radii,
                         int N, double tol = 1e-10);

/// Analytic and antianalytic parts of a multi-Toeplitz operator. The analytic part keeps A_(0).
/// Throws StructureError when t fails is_multi_toeplitz.
std::pair<MultiToeplitzSymbol, MultiToeplitzSymbol> hermitian_part_split(const TruncatedOperator& t,
                                                                         const WeightTable& table,
                                                                         double tol = 1e-10);

/// max over |gamma| = k of ||C_{sigma gamma, gamma}||_F for k = 0..N-|sigma|.
std::vector<double> diagonal_decay_profile(const TruncatedOperator& t, const Word& sigma);

/// sum kron(A_(a), X_a) + sum kron(B_(a), X_a^*): the symbol evaluated at a tuple, acting on
/// C^aux (x) C^k with the coefficient index outermost.
Matrix evaluate_symbol(const MultiToeplitzSymbol& sym, const OperatorTuple& x, double r = 1.0);

}  // namespace ncd

#endif  // NCD_TOEPLITZ_HPP
