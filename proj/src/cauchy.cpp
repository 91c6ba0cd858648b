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

#include "ncd/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncd/errors.hpp"

namespace ncd {

namespace {

constexpr double kGateMargin = 1e-6;

bool exactly_zero(const Matrix& m) { return (m.array() == Complex(0.0, 0.0)).all(); }

void require_tuple(const DomainSpec& spec, const OperatorTuple& x) {
    if (x.n() != spec.n)
        throw DimensionMismatch("tuple has " + std::to_string(x.n()) + " operators, domain needs " + std::to_string(spec.n));
}

// Lambda_{reverse(alpha)}: e_gamma -> sqrt(b_gamma / b_{gamma alpha}) e_{gamma alpha}.
Matrix right_word_operator(const WeightTable& table, const FockBasis& basis, const Word& alpha) {
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (std::size_t col = 0; col < basis.words().size(); ++col) {
        const Word& gamma = basis.word(col);
        if (gamma.length() + alpha.length() > static_cast<std::size_t>(basis.max_length())) break;
        const Word target = concat(gamma, alpha);
        m(static_cast<Eigen::Index>(*basis.index(target)), static_cast<Eigen::Index>(col)) = table.sqrt_ratio(gamma, target);
    }
    return m;
}

}  // namespace

SpectralRadiusReport joint_spectral_radius(const DomainSpec& spec, const OperatorTuple& x, int k_max, double margin) {
    require_tuple(spec, x);
    SpectralRadiusReport rep;
    const std::vector<Matrix> prods = word_products(x, static_cast<int>(spec.degree()));
    const Eigen::Index k = x.dim();
    Matrix lin = Matrix::Zero(k * k, k * k);
    for (const auto& [w, a] : spec.coefficients) {
        const Matrix& xw = prods[word_index(w, spec.n)];
        lin += a.get_d() * kron(xw, xw.conjugate());
    }
    Matrix y = Matrix::Identity(k, k);
    for (int j = 1; j <= k_max; ++j) {
        if (!rep.nilpotent) {
            y = cp_map_apply(spec, x, y);
            rep.nilpotent = exactly_zero(y);
        }
        rep.r_f_sequence.push_back(rep.nilpotent ? 0.0 : std::pow(operator_norm(y), 1.0 / (2.0 * j)));
    }
    rep.r_f_exact = rep.nilpotent ? 0.0 : std::sqrt(spectral_radius(lin));
    rep.gate = rep.r_f_exact < 1.0 - margin;
    return rep;
}

TruncatedOperator reconstruction_operator(const DomainSpec& spec, const OperatorTuple& x, const WeightTable& table,
                                          int N) {
    require_tuple(spec, x);
    const FockBasis basis(spec.n, N);
    const auto right = right_creation_tuple(table, N);
    const std::vector<Matrix> prods = word_products(x, static_cast<int>(spec.degree()));
    TruncatedOperator r = TruncatedOperator::zero(basis, static_cast<int>(x.dim()));
    for (const auto& [beta, a] : spec.coefficients) {
        const Matrix lam = word_operator(right, reverse(beta)).matrix;
        r.matrix += a.get_d() * kron(lam, prods[word_index(beta, spec.n)].adjoint());
    }
    return r;
}

CauchyKernel cauchy_kernel(const DomainSpec& spec, const OperatorTuple& x, const WeightTable& table, int N) {
    SpectralRadiusReport jsr = joint_spectral_radius(spec, x);
    if (!jsr.gate) {
        std::ostringstream os;
        os << "Cauchy kernel needs r_f(X) < 1, got " << jsr.r_f_exact;
        throw DomainError(os.str());
    }
    const TruncatedOperator r = reconstruction_operator(spec, x, table, N);
    const Eigen::Index size = r.matrix.rows();
    Matrix neumann = Matrix::Identity(size, size);
    Matrix power = Matrix::Identity(size, size);
    for (int j = 1; j <= N; ++j) {
        power = power * r.matrix;
        neumann += power;
    }
    Matrix c = neumann;
    for (int j = 1; j < spec.m; ++j) c = c * neumann;

    const std::vector<Matrix> prods = word_products(x, N);
    Matrix expansion = Matrix::Zero(size, size);
    for (std::size_t i = 0; i < prods.size(); ++i) {
        const Word& alpha = r.basis.word(i);
        expansion += table.at_index(i).get_d() * kron(right_word_operator(table, r.basis, alpha), prods[i].adjoint());
    }
    CauchyKernel out{TruncatedOperator(r.basis, r.aux_dim, std::move(c)), 0.0, std::move(jsr)};
    out.fourier_residual = max_abs(out.kernel.matrix - expansion);
    return out;
}

Matrix cauchy_transform(const TruncatedOperator& kernel, const TruncatedOperator& a) {
    if (!(kernel.basis == a.basis)) throw DimensionMismatch("cauchy_transform: operator and kernel bases differ");
    const Eigen::Index k = kernel.aux_dim;
    const Eigen::Index d = a.aux_dim;
    const Eigen::Index D = a.basis.dim();
    Matrix out = Matrix::Zero(d * k, d * k);
    for (Eigen::Index w = 0; w < D; ++w) {
        const Matrix cw = kernel.matrix.block(w * k, 0, k, k);  // C[w k + j', j]
        for (Eigen::Index aa = 0; aa < d; ++aa)
            for (Eigen::Index ap = 0; ap < d; ++ap) {
                const Complex coeff = a.matrix(w * d + aa, ap);
                if (coeff == Complex(0.0, 0.0)) continue;
                out.block(aa * k, ap * k, k, k) += coeff * cw.adjoint();
            }
    }
    return out;
}

double select_dilation(const DomainSpec& spec, const OperatorTuple& x, double* r_f_scaled, int* refinements) {
    const SpectralRadiusReport jsr = joint_spectral_radius(spec, x);
    if (!jsr.gate) {
        std::ostringstream os;
        os << "functional calculus needs r_f(X) < 1, got " << jsr.r_f_exact;
        throw DomainError(os.str());
    }
    double t = jsr.r_f_exact > 0 ? std::min(1.05, 1.0 / std::sqrt(jsr.r_f_exact)) : 2.0;
    int steps = 0;
    for (; steps <= 40; ++steps) {
        const double scaled = joint_spectral_radius(spec, x.scaled(t)).r_f_exact;
        if (scaled < 1.0 - kGateMargin && t > 1.0) {
            if (r_f_scaled) *r_f_scaled = scaled;
            if (refinements) *refinements = steps;
            return t;
        }
        t = 1.0 + 0.5 * (t - 1.0);
    }
    throw MarginError("no dilation t > 1 keeps r_f(tX) below 1", jsr.r_f_exact);
}

CalculusResult analytic_functional_calculus(const DomainSpec& spec, const OperatorTuple& x,
                                            const MultiToeplitzSymbol& f, const WeightTable& table, int N) {
    if (!f.analytic()) throw ValidationError("analytic_functional_calculus: symbol has an antiholomorphic part");
    CalculusResult res;
    res.t = select_dilation(spec, x, &res.r_f_scaled, &res.t_refinements);
    res.r_f = joint_spectral_radius(spec, x).r_f_exact;
    res.value = evaluate_symbol(f, x);
    const CauchyKernel c = cauchy_kernel(spec, x.scaled(res.t), table, N);
    res.cauchy_value = cauchy_transform(c.kernel, symbol_to_operator(f, table, 1.0 / res.t, N));
    res.residual = operator_norm(res.value - res.cauchy_value);
    return res;
}

PluriharmonicCalculusResult pluriharmonic_calculus(const DomainSpec& spec, const OperatorTuple& x,
                                                   const PluriharmonicFunction& g, const WeightTable& table, int N,
                                                   double tol) {
    PluriharmonicCalculusResult res;
    res.t = select_dilation(spec, x);
    res.value = evaluate_symbol(g.symbol, x);
    res.norm = operator_norm(res.value);

    MultiToeplitzSymbol e, f;
    e.aux_dim = f.aux_dim = g.symbol.aux_dim;
    f.A = g.symbol.A;
    for (const auto& [w, blk] : g.symbol.B) e.A[w] = blk.adjoint();
    const double scale = 1.0 / res.t;
    const double e_norm = e.A.empty() ? 0.0 : operator_norm(symbol_to_operator(e, table, scale, N).matrix);
    const double f_norm = f.A.empty() ? 0.0 : operator_norm(symbol_to_operator(f, table, scale, N).matrix);
    const CauchyKernel c = cauchy_kernel(spec, x.scaled(res.t), table, N);
    res.bound = (e_norm + f_norm) * operator_norm(c.kernel.matrix);
    res.bound_holds = res.norm <= res.bound + tol;
    return res;
}

std::vector<ContinuityPoint> calculus_continuity(const DomainSpec& spec, const OperatorTuple& x,
                                                 const std::vector<MultiToeplitzSymbol>& sequence,
                                                 const MultiToeplitzSymbol& limit, const WeightTable& table, int N) {
    select_dilation(spec, x);
    const Matrix target = evaluate_symbol(limit, x);
    std::vector<ContinuityPoint> out;
    for (const auto& gj : sequence) {
        ContinuityPoint p;
        const DistanceReport d = distance(gj, limit, table, N);
        p.symbol_distance = *std::max_element(d.d.begin(), d.d.end());
        p.value_distance = operator_norm(evaluate_symbol(gj, x) - target);
        out.push_back(p);
    }
    return out;
}

RadiusInequalityReport radius_inequality_check(const DomainSpec& spec, const OperatorTuple& x,
                                               const WeightTable& table, int N, double tol) {
    RadiusInequalityReport rep;
    const Matrix r = reconstruction_operator(spec, x, table, N).matrix;
    Matrix power = Matrix::Identity(r.rows(), r.cols());
    Matrix phi = Matrix::Identity(x.dim(), x.dim());
    for (int k = 1; k <= N; ++k) {
        power = power * r;
        phi = cp_map_apply(spec, x, phi);
        const double lhs = operator_norm(power);
        const double rhs = std::sqrt(operator_norm(phi));
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
        if (lhs > rhs + tol * std::max(1.0, rhs)) ++rep.violations;
    }
    return rep;
}

double two_c_minus_i_residual(const DomainSpec& spec, const OperatorTuple& x, const MultiToeplitzSymbol& f,
                              const WeightTable& table, int N) {
    if (!f.analytic() || f.aux_dim != 1) throw ValidationError("2C - I identity: needs a scalar holomorphic symbol");
    const Matrix f0 = symbol_block(f.A, Word{}, 1);
    if (f0(0, 0).imag() != 0.0) throw ValidationError("2C - I identity: F(0) must be real");
    const double t = select_dilation(spec, x);
    const PluriharmonicFunction g = PluriharmonicFunction::real_part(f);
    const CauchyKernel c = cauchy_kernel(spec, x.scaled(t), table, N);
    const TruncatedOperator twice(c.kernel.basis, c.kernel.aux_dim,
                                  2.0 * c.kernel.matrix - Matrix::Identity(c.kernel.matrix.rows(), c.kernel.matrix.cols()));
    const Matrix rhs = cauchy_transform(twice, symbol_to_operator(g.symbol, table, 1.0 / t, N));
    return operator_norm(evaluate_symbol(f, x) - rhs);
}

}  // namespace ncd
