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

#ifndef NCD_BEREZIN_HPP
#define NCD_BEREZIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncd/fock.hpp"
#include "ncd/linalg.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

struct PurityReport {
    bool pure = false;
    bool nilpotent_certificate = false;  // Phi^p(I) vanished exactly at some p <= p_max
    std::optional<int> vanishing_order;  // that p
    std::vector<double> decay;           // ||Phi^p(I)||, p = 1..(vanishing order or p_max)
};

struct MembershipReport {
    bool in_domain = false;
    std::vector<double> min_eigenvalues;  // of (id - Phi)^j(I), j = 1..m
    double phi_max_eigenvalue = 0;        // of Phi(I)
    bool two_condition_in_domain = false; // Phi(I) <= I and (id - Phi)^m(I) >= 0
    bool predicates_agree = true;
    PurityReport purity;
};

MembershipReport domain_membership(const DomainSpec& spec, const OperatorTuple& x, double tol = 1e-10,
                                   int p_max = 50);

PurityReport purity_check(const DomainSpec& spec, const OperatorTuple& x, int p_max = 50, double tol = 1e-12);

/// Smallest p with X_a = 0 for every |a| = p (detected as an exact zero of
/// sum_{|a| = p} X_a X_a^*), or nullopt if none up to max_p.
std::optional<int> nilpotency_order(const OperatorTuple& x, int max_p);

/// Block rows sqrt(b_a) Delta X_a^* for |a| <= N; row index word_index(a) * k + j.
/// Throws DomainError outside the domain.
Matrix berezin_kernel(const DomainSpec& spec, const OperatorTuple& x, int N, double tol = 1e-10);

struct BerezinResult {
    Matrix value;              // on C^aux (x) C^k, coefficient index outermost
    bool extrapolated = false; // X not certified pure: value is the r -> 1 extrapolation at rX
    std::vector<double> radii;
};

/// Extended transform sum_{w,w'} g_{w,w'} (x) K_w^* K_{w'}.
Matrix berezin_transform_with_kernel(const Matrix& kernel, Eigen::Index k, const TruncatedOperator& g);

BerezinResult berezin_transform(const DomainSpec& spec, const OperatorTuple& x, const TruncatedOperator& g,
                                double tol = 1e-10);

/// max_i ||K X_i^* - (W_i^* (x) I) K||.
double intertwining_residual(const DomainSpec& spec, const OperatorTuple& x, int N, double tol = 1e-10);

/// sum c W_a W_b^*.
struct HereditaryPolynomial {
    struct Term {
        Word alpha, beta;
        Complex c;
    };
    int n = 1;
    std::vector<Term> terms;

    std::size_t degree() const;  // max over terms of max(|alpha|, |beta|)
    Matrix at_tuple(const OperatorTuple& x) const;
    TruncatedOperator at_model(const WeightTable& table, int N) const;
    std::string describe() const;
};

struct HereditaryEvaluation {
    Matrix value;                          // q(X, X^*)
    std::optional<double> berezin_residual; // ||extrapolated B_{rX}[q(W_N)] - value|| when rX is certified pure
    std::vector<double> radii;
};

HereditaryEvaluation hereditary_eval(const DomainSpec& spec, const OperatorTuple& x, const HereditaryPolynomial& p,
                                     int N, double tol = 1e-10);

struct MeanValueReport {
    Matrix direct;       // F(X)
    Matrix transformed;  // extended Berezin transform at X/r of F(rW_N)
    double residual = 0;
};

/// Throws DomainError unless X/r lies in the domain and is certified pure.
MeanValueReport mean_value_check(const MultiToeplitzSymbol& sym, const DomainSpec& spec, const OperatorTuple& x,
                                 double r, int N, double tol = 1e-10);

}  // namespace ncd

#endif  // NCD_BEREZIN_HPP
