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

#include "ncd/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncd/errors.hpp"

namespace ncd {

namespace {

bool exactly_zero(const Matrix& m) { return (m.array() == Complex(0.0, 0.0)).all(); }

void require_tuple(const DomainSpec& spec, const OperatorTuple& x) {
    if (x.n() != spec.n)
        throw DimensionMismatch("tuple has " + std::to_string(x.n()) + " operators, domain needs " + std::to_string(spec.n));
}

// Linear extrapolation to r = 1 from the last two samples.
Matrix extrapolate(const std::vector<double>& radii, const std::vector<Matrix>& values) {
    const std::size_t k = values.size() - 1;
    return values[k] + (values[k] - values[k - 1]) * ((1.0 - radii[k]) / (radii[k] - radii[k - 1]));
}

const std::vector<double> kBoundaryRadii{0.9, 0.99, 0.999};

}  // namespace

PurityReport purity_check(const DomainSpec& spec, const OperatorTuple& x, int p_max, double tol) {
    require_tuple(spec, x);
    PurityReport rep;
    Matrix y = Matrix::Identity(x.dim(), x.dim());
    for (int p = 1; p <= p_max; ++p) {
        y = cp_map_apply(spec, x, y);
        if (exactly_zero(y)) {
            rep.decay.push_back(0.0);
            rep.nilpotent_certificate = true;
            rep.vanishing_order = p;
            break;
        }
        rep.decay.push_back(operator_norm(y));
    }
    rep.pure = rep.nilpotent_certificate || (!rep.decay.empty() && rep.decay.back() <= tol);
    return rep;
}

std::optional<int> nilpotency_order(const OperatorTuple& x, int max_p) {
    Matrix y = Matrix::Identity(x.dim(), x.dim());
    for (int p = 1; p <= max_p; ++p) {
        Matrix next = Matrix::Zero(x.dim(), x.dim());
        for (const auto& xi : x.ops) next += xi * y * xi.adjoint();
        y = std::move(next);
        if (exactly_zero(y)) return p;
    }
    return std::nullopt;
}

MembershipReport domain_membership(const DomainSpec& spec, const OperatorTuple& x, double tol, int p_max) {
    require_tuple(spec, x);
    MembershipReport rep;
    const Matrix id = Matrix::Identity(x.dim(), x.dim());
    Matrix y = id;
    for (int j = 1; j <= spec.m; ++j) {
        y = y - cp_map_apply(spec, x, y);
        rep.min_eigenvalues.push_back(min_eigenvalue(y));
    }
    rep.phi_max_eigenvalue = max_eigenvalue(cp_map_apply(spec, x, id));
    rep.in_domain = std::all_of(rep.min_eigenvalues.begin(), rep.min_eigenvalues.end(),
                                [&](double e) { return e >= -tol; });
    rep.two_condition_in_domain = rep.phi_max_eigenvalue <= 1.0 + tol && rep.min_eigenvalues.back() >= -tol;
    rep.predicates_agree = rep.in_domain == rep.two_condition_in_domain;
    rep.purity = purity_check(spec, x, p_max);
    return rep;
}

Matrix berezin_kernel(const DomainSpec& spec, const OperatorTuple& x, int N, double tol) {
    require_tuple(spec, x);
    const Matrix defect = defect_operator(spec, x, spec.m);
    const double lowest = min_eigenvalue(defect);
    if (lowest < -tol) {
        std::ostringstream os;
        os << "tuple is outside the domain: defect eigenvalue " << lowest;
        throw DomainError(os.str());
    }
    Matrix y = Matrix::Identity(x.dim(), x.dim());
    for (int j = 1; j < spec.m; ++j) {
        y = y - cp_map_apply(spec, x, y);
        const double e = min_eigenvalue(y);
        if (e < -tol) {
            std::ostringstream os;
            os << "tuple is outside the domain: order " << j << " defect eigenvalue " << e;
            throw DomainError(os.str());
        }
    }
    const Matrix delta = psd_sqrt(defect, tol);
    const WeightTable table = weights_by_convolution(spec, N);
    const std::vector<Matrix> prods = word_products(x, N);
    const Eigen::Index k = x.dim();
    Matrix kernel(static_cast<Eigen::Index>(prods.size()) * k, k);
    for (std::size_t i = 0; i < prods.size(); ++i)
        kernel.block(static_cast<Eigen::Index>(i) * k, 0, k, k) =
            std::sqrt(table.at_index(i).get_d()) * delta * prods[i].adjoint();
    return kernel;
}

Matrix berezin_transform_with_kernel(const Matrix& kernel, Eigen::Index k, const TruncatedOperator& g) {
    const Eigen::Index D = g.basis.dim();
    const Eigen::Index d = g.aux_dim;
    if (kernel.rows() != D * k || kernel.cols() != k)
        throw DimensionMismatch("berezin transform: kernel does not match the operator basis");
    Matrix lifted = Matrix::Zero(D * d * k, d * k);
    for (Eigen::Index w = 0; w < D; ++w)
        for (Eigen::Index a = 0; a < d; ++a)
            lifted.block((w * d + a) * k, a * k, k, k) = kernel.block(w * k, 0, k, k);
    const Matrix expanded = kron(g.matrix, Matrix::Identity(k, k));
    return lifted.adjoint() * expanded * lifted;
}

BerezinResult berezin_transform(const DomainSpec& spec, const OperatorTuple& x, const TruncatedOperator& g, double tol) {
    if (g.basis.n() != spec.n) throw DimensionMismatch("berezin transform: operator basis has the wrong alphabet");
    const int N = g.basis.max_length();
    BerezinResult res;
    if (purity_check(spec, x).pure) {
        res.value = berezin_transform_with_kernel(berezin_kernel(spec, x, N, tol), x.dim(), g);
        return res;
    }
    std::vector<Matrix> values;
    for (double r : kBoundaryRadii) {
        values.push_back(berezin_transform_with_kernel(berezin_kernel(spec, x.scaled(r), N, tol), x.dim(), g));
    }
    res.radii = kBoundaryRadii;
    res.value = extrapolate(kBoundaryRadii, values);
    res.extrapolated = true;
    return res;
}

double intertwining_residual(const DomainSpec& spec, const OperatorTuple& x, int N, double tol) {
    const Matrix kernel = berezin_kernel(spec, x, N, tol);
    const WeightTable table = weights_by_convolution(spec, N);
    const Matrix id = Matrix::Identity(x.dim(), x.dim());
    double worst = 0;
    for (int i = 1; i <= spec.n; ++i) {
        const Matrix w = weighted_left_creation(table, i, N).matrix;
        const Matrix lhs = kernel * x[static_cast<std::size_t>(i - 1)].adjoint();
        const Matrix rhs = kron(w.adjoint(), id) * kernel;
        worst = std::max(worst, operator_norm(lhs - rhs));
    }
    return worst;
}

std::size_t HereditaryPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& t : terms) d = std::max({d, t.alpha.length(), t.beta.length()});
    return d;
}

Matrix HereditaryPolynomial::at_tuple(const OperatorTuple& x) const {
    if (x.n() != n) throw DimensionMismatch("hereditary polynomial: tuple size differs");
    const std::vector<Matrix> prods = word_products(x, static_cast<int>(degree()));
    Matrix out = Matrix::Zero(x.dim(), x.dim());
    for (const auto& t : terms)
        out += t.c * prods[word_index(t.alpha, n)] * prods[word_index(t.beta, n)].adjoint();
    return out;
}

TruncatedOperator HereditaryPolynomial::at_model(const WeightTable& table, int N) const {
    if (table.n() != n) throw DimensionMismatch("hereditary polynomial: weight table alphabet differs");
    const OperatorTuple w = as_tuple(left_creation_tuple(table, N));
    TruncatedOperator out = TruncatedOperator::zero(FockBasis(n, N));
    out.matrix = at_tuple(w);
    return out;
}

std::string HereditaryPolynomial::describe() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.c.real() << (t.c.imag() < 0 ? "-" : "+") << std::abs(t.c.imag()) << "i)";
        if (!t.alpha.empty()) os << " W_" << t.alpha.to_string();
        if (!t.beta.empty()) os << " W_" << t.beta.to_string() << "^*";
    }
    return first ? "0" : os.str();
}

HereditaryEvaluation hereditary_eval(const DomainSpec& spec, const OperatorTuple& x, const HereditaryPolynomial& p,
                                     int N, double tol) {
    require_tuple(spec, x);
    HereditaryEvaluation ev;
    ev.value = p.at_tuple(x);
    if (!purity_check(spec, x).pure) return ev;
    const WeightTable table = weights_by_convolution(spec, N);
    const TruncatedOperator model = p.at_model(table, N);
    std::vector<Matrix> values;
    for (double r : kBoundaryRadii)
        values.push_back(berezin_transform_with_kernel(berezin_kernel(spec, x.scaled(r), N, tol), x.dim(), model));
    ev.radii = kBoundaryRadii;
    ev.berezin_residual = operator_norm(extrapolate(kBoundaryRadii, values) - ev.value);
    return ev;
}

MeanValueReport mean_value_check(const MultiToeplitzSymbol& sym, const DomainSpec& spec, const OperatorTuple& x,
                                 double r, int N, double tol) {
    if (!(r > 0 && r <= 1)) throw ValidationError("mean_value_check: r must lie in (0, 1]");
    const OperatorTuple y = x.scaled(1.0 / r);
    const MembershipReport mem = domain_membership(spec, y, tol);
    if (!mem.in_domain) throw DomainError("mean_value_check: X/r is outside the domain");
    if (!mem.purity.pure) throw DomainError("mean_value_check: X/r is not certified pure");
    const WeightTable table = weights_by_convolution(spec, N);
    MeanValueReport rep;
    rep.direct = evaluate_symbol(sym, x);
    rep.transformed =
        berezin_transform_with_kernel(berezin_kernel(spec, y, N, tol), x.dim(), symbol_to_operator(sym, table, r, N));
    rep.residual = operator_norm(rep.direct - rep.transformed);
    return rep;
}

}  // namespace ncd
