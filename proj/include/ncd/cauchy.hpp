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

#ifndef NCD_CAUCHY_HPP
#define NCD_CAUCHY_HPP

#include <vector>

#include "ncd/fock.hpp"
#include "ncd/linalg.hpp"
#include "ncd/pluriharmonic.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

struct SpectralRadiusReport {
    double r_f_exact = 0;               // sqrt of the spectral radius of sum a_a X_a (x) conj(X_a)
    std::vector<double> r_f_sequence;   // ||Phi^k(I)||^{1/2k}, k = 1..k_max
    bool nilpotent = false;             // Phi^k(I) vanished exactly, so r_f = 0
    bool gate = false;                  // r_f_exact < 1 - margin
};

SpectralRadiusReport joint_spectral_radius(const DomainSpec& spec, const OperatorTuple& x, int k_max = 40,
                                           double margin = 1e-6);

/// R = sum a_b Lambda_{reverse(b)} (x) X_b^* on the truncation; aux_dim is the tuple dimension.
TruncatedOperator reconstruction_operator(const DomainSpec& spec, const OperatorTuple& x, const WeightTable& table,
                                          int N);

struct CauchyKernel {
    TruncatedOperator kernel;        // (sum_{j <= N} R^j)^m
    double fourier_residual = 0;     // max entry of kernel - sum b_a Lambda_{reverse(a)} (x) X_a^*
    SpectralRadiusReport spectral;
};

/// Throws DomainError when the spectral-radius gate fails.
CauchyKernel cauchy_kernel(const DomainSpec& spec, const OperatorTuple& x, const WeightTable& table, int N);

/// <C(A) x, y> = <(A (x) I)(1 (x) x), kernel (1 (x) y)>, with the coefficient index of A outermost.
Matrix cauchy_transform(const TruncatedOperator& kernel, const TruncatedOperator& a);

struct CalculusResult {
    Matrix value;            // direct series
    Matrix cauchy_value;     // Cauchy transform at tX of F(W/t)
    double residual = 0;
    double t = 1;
    double r_f = 0;
    double r_f_scaled = 0;   // recomputed at tX
    int t_refinements = 0;
};

/// Chooses t > 1 with r_f(tX) < 1. Throws DomainError when the gate fails and
/// MarginError when no admissible t is found.
double select_dilation(const DomainSpec& spec, const OperatorTuple& x, double* r_f_scaled = nullptr,
                       int* refinements = nullptr);

CalculusResult analytic_functional_calculus(const DomainSpec& spec, const OperatorTuple& x,
                                            const MultiToeplitzSymbol& f, const WeightTable& table, int N);

struct PluriharmonicCalculusResult {
    Matrix value;
    double norm = 0;          // ||G(X)||
    double bound = 0;         // (||E(W/t)|| + ||F(W/t)||) ||C_{tX}||
    bool bound_holds = true;
    double t = 1;
};

PluriharmonicCalculusResult pluriharmonic_calculus(const DomainSpec& spec, const OperatorTuple& x,
                                                   const PluriharmonicFunction& g, const WeightTable& table, int N,
                                                   double tol = 1e-10);

struct ContinuityPoint {
    double symbol_distance = 0;  // max over the rho radii of d_r(G_j, G)
    double value_distance = 0;   // ||G_j(X) - G(X)||
};

std::vector<ContinuityPoint> calculus_continuity(const DomainSpec& spec, const OperatorTuple& x,
                                                 const std::vector<MultiToeplitzSymbol>& sequence,
                                                 const MultiToeplitzSymbol& limit, const WeightTable& table, int N);

struct RadiusInequalityReport {
    std::vector<double> lhs;     // ||R_N^k||
    std::vector<double> rhs;     // ||Phi^k_{q,X}(I)||^{1/2}
    std::vector<double> margin;  // rhs - lhs
    int violations = 0;
};

RadiusInequalityReport radius_inequality_check(const DomainSpec& spec, const OperatorTuple& x,
                                               const WeightTable& table, int N, double tol = 1e-12);

/// ||F(X) - C'(G(W/t))|| where G = Re F and C' is the transform with kernel 2C_{tX} - I.
/// Requires a scalar holomorphic F with real F(0).
double two_c_minus_i_residual(const DomainSpec& spec, const OperatorTuple& x, const MultiToeplitzSymbol& f,
                              const WeightTable& table, int N);

}  // namespace ncd

#endif  // NCD_CAUCHY_HPP
