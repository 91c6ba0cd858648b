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

#include "ncd/pluriharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncd/berezin.hpp"
#include "ncd/errors.hpp"

namespace ncd {

namespace {

// Terms of total word length k.
MultiToeplitzSymbol degree_part(const MultiToeplitzSymbol& s, std::size_t k) {
    MultiToeplitzSymbol out;
    out.aux_dim = s.aux_dim;
    for (const auto& [w, blk] : s.A)
        if (w.length() == k) out.A[w] = blk;
    for (const auto& [w, blk] : s.B)
        if (w.length() == k) out.B[w] = blk;
    return out;
}

}  // namespace

bool PluriharmonicFunction::self_adjoint(double tol) const {
    const MultiToeplitzSymbol adj = symbol_adjoint(symbol);
    return symbol_distance(symbol, adj) <= tol;
}

PluriharmonicFunction PluriharmonicFunction::real_part(const MultiToeplitzSymbol& holomorphic) {
    if (!holomorphic.analytic()) throw ValidationError("real_part: expects a holomorphic symbol");
    PluriharmonicFunction out;
    out.symbol = 0.5 * (holomorphic + symbol_adjoint(holomorphic));
    return out;
}

HolomorphicRadiusReport holomorphic_radius_test(const MultiToeplitzSymbol& f, const WeightTable& table, double tol) {
    f.validate();
    HolomorphicRadiusReport rep;
    const std::size_t len = f.support_length();
    for (std::size_t k = 1; k <= len; ++k) {
        Matrix acc = Matrix::Zero(f.aux_dim, f.aux_dim);
        bool any = false;
        for (const auto& [w, blk] : f.A) {
            if (w.length() != k) continue;
            any = true;
            acc += omega_beta(table, w).estimate.get_d() * blk.adjoint() * blk;
        }
        if (!any) continue;
        const double v = std::pow(operator_norm(acc), 1.0 / (2.0 * static_cast<double>(k)));
        rep.degrees.push_back(static_cast<int>(k));
        rep.profile.push_back(v);
        rep.profile_max = std::max(rep.profile_max, v);
    }
    rep.limsup_estimate = 0.0;
    rep.pass = rep.limsup_estimate <= 1.0 + tol;
    return rep;
}

PluriharmonicEvaluation evaluate(const PluriharmonicFunction& f, const OperatorTuple& x, double r) {
    PluriharmonicEvaluation ev;
    const std::size_t len = f.symbol.support_length();
    ev.value = Matrix::Zero(f.symbol.aux_dim * x.dim(), f.symbol.aux_dim * x.dim());
    for (std::size_t k = 0; k <= len; ++k) {
        const Matrix part = evaluate_symbol(degree_part(f.symbol, k), x, r);
        ev.increments.push_back(operator_norm(part));
        ev.value += part;
    }
    return ev;
}

GammaKernel gamma_kernel(const MultiToeplitzSymbol& f, const WeightTable& table, double r, int order) {
    f.validate();
    if (!f.analytic()) throw ValidationError("gamma_kernel: expects a holomorphic symbol");
    if (order < 0 || order > table.max_length()) throw TruncationExceeded("gamma_kernel: order exceeds the weight table");
    GammaKernel g{r, order, f.aux_dim, FockBasis(table.n(), order), Matrix()};
    const Eigen::Index d = f.aux_dim;
    const auto& words = g.basis.words();
    g.blocks = Matrix::Zero(static_cast<Eigen::Index>(words.size()) * d, static_cast<Eigen::Index>(words.size()) * d);
    const Matrix a0 = symbol_block(f.A, Word{}, f.aux_dim);
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const Word& omega = words[i];
            const Word& gamma = words[j];
            const Comparability c = compare_right(omega, gamma);
            Matrix blk = Matrix::Zero(d, d);
            if (omega == gamma) {
                blk = a0 + a0.adjoint();
            } else if (c.kind == Comparability::Kind::GeqR) {
                const double s = table.sqrt_ratio(gamma, omega) * std::pow(r, static_cast<double>(c.quotient.length()));
                blk = s * symbol_block(f.A, c.quotient, f.aux_dim);
            } else if (c.kind == Comparability::Kind::LtR) {
                const double s = table.sqrt_ratio(omega, gamma) * std::pow(r, static_cast<double>(c.quotient.length()));
                blk = s * symbol_block(f.A, c.quotient, f.aux_dim).adjoint();
            }
            g.blocks.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) = blk;
        }
    }
    return g;
}

SchurReport schur_positivity_test(const MultiToeplitzSymbol& f, const WeightTable& table,
                                  const std::vector<double>& radii, int order, int N, double tol) {
    if (order > N) throw TruncationExceeded("schur_positivity_test: order exceeds N");
    SchurReport rep;
    const Eigen::Index size = static_cast<Eigen::Index>(word_count(table.n(), order)) * f.aux_dim;
    for (double r : radii) {
        SchurRadius s;
        s.r = r;
        const GammaKernel g = gamma_kernel(f, table, r, order);
        const TruncatedOperator op = symbol_to_operator(f, table, r, N);
        const Matrix compression = (op.matrix + op.matrix.adjoint()).topLeftCorner(size, size);
        s.equality_residual = max_abs(g.blocks - compression);
        s.gamma_min_eigenvalue = min_eigenvalue(g.blocks);
        s.compression_min_eigenvalue = min_eigenvalue(compression);
        s.psd = s.gamma_min_eigenvalue >= -tol;
        rep.worst_equality_residual = std::max(rep.worst_equality_residual, s.equality_residual);
        rep.worst_eigenvalue_gap =
            std::max(rep.worst_eigenvalue_gap, std::abs(s.gamma_min_eigenvalue - s.compression_min_eigenvalue));
        rep.psd = rep.psd && s.psd;
        rep.radii.push_back(s);
    }
    return rep;
}

DistanceReport distance(const MultiToeplitzSymbol& f, const MultiToeplitzSymbol& g, const WeightTable& table, int N,
                        int k_max) {
    DistanceReport rep;
    const MultiToeplitzSymbol diff = f + Complex(-1.0) * g;
    for (int k = 1; k <= k_max; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        // Norm through the Gram matrix, which is identical for D and -D.
        const Matrix m = symbol_to_operator(diff, table, r, N).matrix;
        const double d = std::sqrt(std::max(0.0, max_eigenvalue(m.adjoint() * m)));
        rep.radii.push_back(r);
        rep.d.push_back(d);
        rep.rho += std::ldexp(1.0, -k) * d / (1.0 + d);
    }
    rep.tail_bound = std::ldexp(1.0, -k_max);
    return rep;
}

WeierstrassReport weierstrass_limit(const std::vector<MultiToeplitzSymbol>& sequence, const WeightTable& table,
                                    const std::vector<double>& radii, int N, double tol) {
    WeierstrassReport rep;
    rep.radii = radii;
    if (sequence.size() < 2) {
        rep.diagnosis = "sequence too short";
        return rep;
    }
    const std::size_t J = sequence.size() - 1;
    bool cauchy = true;
    for (double r : radii) {
        const Matrix last = symbol_to_operator(sequence[J], table, r, N).matrix;
        double gap = 0;
        for (std::size_t j = J / 2; j < J; ++j)
            gap = std::max(gap, operator_norm(symbol_to_operator(sequence[j], table, r, N).matrix - last));
        rep.cauchy_gaps.push_back(gap);
        if (gap > tol * (1.0 + operator_norm(last))) cauchy = false;
    }
    if (!cauchy) {
        std::ostringstream os;
        os << "not Cauchy on the radius grid: largest tail gap "
           << *std::max_element(rep.cauchy_gaps.begin(), rep.cauchy_gaps.end());
        rep.diagnosis = os.str();
        return rep;
    }
    rep.converged = true;
    rep.limit = sequence[J];
    for (double r : radii) {
        rep.limit_reproduction = std::max(
            rep.limit_reproduction, operator_norm(symbol_to_operator(*rep.limit, table, r, N).matrix -
                                                  symbol_to_operator(sequence[J], table, r, N).matrix));
    }
    for (const auto& fj : sequence) rep.rho_to_limit.push_back(distance(fj, *rep.limit, table, N).rho);
    for (std::size_t j = 1; j < rep.rho_to_limit.size(); ++j)
        if (rep.rho_to_limit[j] > rep.rho_to_limit[j - 1] + 1e-12) rep.rho_monotone = false;
    rep.diagnosis = "Cauchy on every radius";
    return rep;
}

PluriharmonicFunction conjugate(const PluriharmonicFunction& g, double tol) {
    if (!g.self_adjoint(tol)) throw StructureError("conjugate: function is not self-adjoint");
    const Complex i(0.0, 1.0);
    PluriharmonicFunction h;
    h.symbol.aux_dim = g.symbol.aux_dim;
    h.declared_max_order = g.declared_max_order;
    for (const auto& [w, blk] : g.symbol.A) {
        if (w.empty()) continue;
        h.symbol.A[w] = -i * blk;
        h.symbol.B[w] = i * blk.adjoint();
    }
    return h;
}

BoundedRoundtripReport bounded_roundtrip(const MultiToeplitzSymbol& f, const DomainSpec& spec, const WeightTable& table,
                                         int N, const std::vector<double>& radii, const OperatorTuple& x, double tol) {
    const MembershipReport mem = domain_membership(spec, x, tol);
    if (!mem.in_domain) throw DomainError("bounded_roundtrip: tuple is outside the domain");
    if (!mem.purity.pure) throw DomainError("bounded_roundtrip: tuple is not certified pure");
    BoundedRoundtripReport rep;
    rep.radii = radii;
    const TruncatedOperator psi = symbol_to_operator(f, table, 1.0, N);
    double weighted = 0;
    for (std::size_t k = 1; k <= f.support_length(); ++k)
        weighted += static_cast<double>(k) * operator_norm(symbol_to_operator(degree_part(f, k), table, 1.0, N).matrix);
    for (double r : radii) {
        const double res = operator_norm(symbol_to_operator(f, table, r, N).matrix - psi.matrix);
        const double bound = (1.0 - r) * weighted;
        rep.radial_residuals.push_back(res);
        rep.radial_bounds.push_back(bound);
        if (res > bound + tol) rep.radial_within_bound = false;
    }
    const Matrix direct = evaluate_symbol(f, x);
    const Matrix transformed = berezin_transform_with_kernel(berezin_kernel(spec, x, N, tol), x.dim(), psi);
    rep.berezin_residual = operator_norm(direct - transformed);
    return rep;
}

}  // namespace ncd
