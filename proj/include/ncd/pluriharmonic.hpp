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

#ifndef NCD_PLURIHARMONIC_HPP
#define NCD_PLURIHARMONIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncd/fock.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

/// Finitely supported free pluriharmonic function: the A-part is holomorphic, the B-part antiholomorphic.
struct PluriharmonicFunction {
    MultiToeplitzSymbol symbol;
    int declared_max_order = -1;  // -1: the support length

    bool self_adjoint(double tol = 1e-12) const;
    /// Re F = (F + F^*) / 2 for a holomorphic F.
    static PluriharmonicFunction real_part(const MultiToeplitzSymbol& holomorphic);
};

struct HolomorphicRadiusReport {
    std::vector<int> degrees;
    std::vector<double> profile;    // ||sum_{|b| = k} omega_b A_b^* A_b||^{1/2k}
    double profile_max = 0;
    double limsup_estimate = 0;     // 0 for finite support: the sequence is eventually zero
    bool pass = true;
};

HolomorphicRadiusReport holomorphic_radius_test(const MultiToeplitzSymbol& f, const WeightTable& table,
                                                double tol = 1e-10);

struct PluriharmonicEvaluation {
    Matrix value;
    std::vector<double> increments;  // operator norm of the degree-k part, k = 0..support length
};

PluriharmonicEvaluation evaluate(const PluriharmonicFunction& f, const OperatorTuple& x, double r = 1.0);

struct GammaKernel {
    double r = 1;
    int order = 0;
    int aux_dim = 1;
    FockBasis basis;  // words of length <= order
    Matrix blocks;    // block (omega, gamma) at rows omega * aux_dim, columns gamma * aux_dim
};

/// Kernel of a holomorphic symbol. Throws ValidationError when f has a B-part.
GammaKernel gamma_kernel(const MultiToeplitzSymbol& f, const WeightTable& table, double r, int order);

struct SchurRadius {
    double r = 0;
    double equality_residual = 0;   // max entry of Gamma - compression of F(rW)^* + F(rW)
    double gamma_min_eigenvalue = 0;
    double compression_min_eigenvalue = 0;
    bool psd = false;
};

struct SchurReport {
    std::vector<SchurRadius> radii;
    double worst_equality_residual = 0;
    double worst_eigenvalue_gap = 0;
    bool psd = true;  // on the supplied grid only
};

SchurReport schur_positivity_test(const MultiToeplitzSymbol& f, const WeightTable& table,
                                  const std::vector<double>& radii, int order, int N, double tol = 1e-10);

struct DistanceReport {
    std::vector<double> radii;  // 1 - 2^{-k}
    std::vector<double> d;      // truncated d_{r_k}, lower bounds of the untruncated values
    double rho = 0;
    double tail_bound = 0;      // 2^{-k_max}
};

DistanceReport distance(const MultiToeplitzSymbol& f, const MultiToeplitzSymbol& g, const WeightTable& table, int N,
                        int k_max = 8);

struct WeierstrassReport {
    bool converged = false;
    std::vector<double> radii;
    std::vector<double> cauchy_gaps;     // per radius: max_{j >= J/2} ||F_j(rW) - F_J(rW)||
    std::optional<MultiToeplitzSymbol> limit;
    double limit_reproduction = 0;       // max_r ||limit(rW) - F_J(rW)||
    std::vector<double> rho_to_limit;    // rho(F_j, limit)
    bool rho_monotone = true;
    std::string diagnosis;
};

WeierstrassReport weierstrass_limit(const std::vector<MultiToeplitzSymbol>& sequence, const WeightTable& table,
                                    const std::vector<double>& radii, int N, double tol);

/// Harmonic conjugate H with H(0) = 0 and G + iH holomorphic. Throws StructureError unless G is self-adjoint.
PluriharmonicFunction conjugate(const PluriharmonicFunction& g, double tol = 1e-12);

struct BoundedRoundtripReport {
    std::vector<double> radii;
    std::vector<double> radial_residuals;  // ||F(rW_N) - psi_N||
    std::vector<double> radial_bounds;     // (1 - r) sum_k k ||degree-k part of psi_N||
    bool radial_within_bound = true;
    double berezin_residual = 0;           // ||F(X) - extended Berezin transform of psi_N at X||
};

/// Throws DomainError unless X is in the domain and certified pure.
BoundedRoundtripReport bounded_roundtrip(const MultiToeplitzSymbol& f, const DomainSpec& spec, const WeightTable& table,
                                         int N, const std::vector<double>& radii, const OperatorTuple& x,
                                         double tol = 1e-10);

}  // namespace ncd

#endif  // NCD_PLURIHARMONIC_HPP
