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

#include "ncd/suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncd/berezin.hpp"
#include "ncd/cauchy.hpp"
#include "ncd/errors.hpp"
#include "ncd/fock.hpp"
#include "ncd/generators.hpp"
#include "ncd/pluriharmonic.hpp"

namespace ncd {

namespace {

Rng area_rng(const SuiteOptions& o, const std::string& name, const std::string& area) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name + "/" + area) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return Rng(o.seed ^ h);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Outcome flag(bool ok, std::string detail = {}) { return {ok ? 0.0 : 1.0, std::move(detail), false}; }

int tuple_dim(const DomainSpec& spec) { return spec.n == 1 ? 4 : 3; }

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;
    for (int n : {1, 2})
        for (int m : {1, 2, 3})
            out.push_back({"hyperball-n" + std::to_string(n) + "-m" + std::to_string(m), DomainSpec::hyperball(n, m)});
    for (int m : {1, 2}) {
        DomainSpec s;
        s.n = 2;
        s.m = m;
        s.coefficients[Word{1}] = 1;
        s.coefficients[Word{2}] = 1;
        s.coefficients[Word{1, 2}] = 1;
        out.push_back({"z1+z2+z1z2-m" + std::to_string(m), s});
    }
    for (int m : {1, 2}) {
        DomainSpec s;
        s.n = 1;
        s.m = m;
        s.coefficients[Word{1}] = 1;
        s.coefficients[Word{1, 1}] = 1;
        out.push_back({"z+z2-m" + std::to_string(m), s});
    }
    return out;
}

bool is_hyperball(const DomainSpec& spec) {
    return spec.coefficients == DomainSpec::hyperball(spec.n, spec.m).coefficients;
}

void weights_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o) {
    const std::string p = name + "/weights/";
    const int N = o.N;
    rep.run(p + "oracle-equality", "factorization sum equals the coefficients of (1 - q)^{-m}", 0, [&] {
        return flag(weights_by_factorization(spec, N) == weights_by_convolution(spec, N));
    });
    if (is_hyperball(spec)) {
        rep.run(p + "hyperball-closed-form", "b_a = C(|a| + m - 1, m - 1) on the hyperball", 0, [&] {
            return flag(weights_by_convolution(spec, N).values() == hyperball_weights(spec.n, spec.m, N).values());
        });
    }
    rep.run(p + "ratio-bound", "b_a b_b <= C(|b| + m - 1, m - 1) b_{ab}", 0, [&] {
        const RatioBoundReport r = ratio_bound_check(weights_by_convolution(spec, N));
        return Outcome{static_cast<double>(r.violations),
                       std::to_string(r.pairs_checked) + " pairs, worst slack " + fmt(r.worst_slack.get_d()), false};
    });
    rep.run(p + "positivity", "b_a > 0 and b_{g0} = 1", 0, [&] {
        const WeightTable t = weights_by_convolution(spec, N);
        bool ok = t.at_index(0) == 1;
        for (const auto& v : t.values()) ok = ok && v > 0;
        return flag(ok);
    });
}

void model_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o) {
    const std::string p = name + "/model/";
    const int N = o.N;
    const WeightTable table = weights_by_convolution(spec, N);
    const ModelIdentityReport mi = verify_model_identities(spec, table, N, o.tol);
    rep.run(p + "defect-identity", "(id - Phi_{q,W})^m(I) = P_C", o.tol, [&] { return Outcome{mi.defect_residual}; });
    rep.run(p + "phi-contractive", "Phi_{q,W}(I) <= I", o.tol,
            [&] { return Outcome{std::max(0.0, mi.phi_max_eigenvalue - 1.0)}; });
    rep.run(p + "right-defect-identity", "(id - Phi_{q~,Lambda})^m(I) = P_C", o.tol,
            [&] { return Outcome{mi.defect_residual_right}; });
    rep.run(p + "commutant", "W_i Lambda_j = Lambda_j W_i", 1e-12, [&] { return Outcome{mi.commutation_residual}; });
    rep.run(p + "purity-profile", "Phi^p_{q,W}(I) -> 0", o.tol, [&] {
        return Outcome{mi.purity_decay.back(), "truncation nilpotence at p = N + 1", false};
    });
    rep.run(p + "weighted-space-conjugation", "U W_i U^{-1} is the multiplication shift", 1e-12,
            [&] { return Outcome{weighted_space_conjugation(table, N).second.shift_residual}; });
    rep.run(p + "word-norm-bound", "||W_a|| <= b_a^{-1/2} C(|a| + m - 1, m - 1)^{1/2}", o.tol, [&] {
        const auto ops = left_creation_tuple(table, N);
        double worst = 0;
        for (const Word& a : enumerate_words(spec.n, std::min(4, N - 3 > 0 ? N - 3 : 1))) {
            const double lhs = operator_norm(word_operator(ops, a).matrix);
            const double rhs = std::sqrt(binomial(static_cast<long>(a.length()) + spec.m - 1, spec.m - 1).get_d() /
                                         table(a).get_d());
            worst = std::max(worst, lhs - rhs);
        }
        return Outcome{std::max(0.0, worst)};
    });
    rep.run(p + "orthogonal-ranges", "W_b^* W_b' = 0 for |b| = |b'|, b != b'", 0, [&] {
        const auto ops = left_creation_tuple(table, N);
        const auto words = enumerate_words(spec.n, std::min(2, N));
        double worst = 0;
        for (const Word& a : words)
            for (const Word& b : words)
                if (a != b && a.length() == b.length())
                    worst = std::max(worst, max_abs(word_operator(ops, a).matrix.adjoint() * word_operator(ops, b).matrix));
        return Outcome{worst};
    });
}

void toeplitz_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                     const std::optional<MultiToeplitzSymbol>& symbol) {
    const std::string p = name + "/toeplitz/";
    const int N = o.N;
    const WeightTable table = weights_by_convolution(spec, N);
    Rng rng = area_rng(o, name, "toeplitz");
    std::vector<MultiToeplitzSymbol> symbols;
    if (symbol) symbols.push_back(*symbol);
    for (int s = 0; s < o.samples; ++s) symbols.push_back(random_symbol(spec.n, std::min(2, N), o.aux_dim, false, rng));

    for (std::size_t s = 0; s < symbols.size(); ++s) {
        const MultiToeplitzSymbol& sym = symbols[s];
        const std::string id = p + "symbol" + std::to_string(s) + "/";
        const TruncatedOperator t = symbol_to_operator(sym, table, 1.0, N);
        rep.run(id + "roundtrip", "Fourier coefficients of phi(W) recover the symbol", o.tol, [&] {
            return Outcome{symbol_distance(fourier_coefficients(t, table, static_cast<int>(sym.support_length())), sym)};
        });
        rep.run(id + "structure", "phi(rW) is weighted right multi-Toeplitz", 1e-12, [&] {
            const ToeplitzReport r = is_multi_toeplitz(t, table, 1e-12);
            return Outcome{std::max(r.worst_structure_residual, r.worst_incomparable_entry) / std::max(1.0, r.scale)};
        });
        rep.run(id + "perturbation-rejected", "a 0.1 entry perturbation breaks the Toeplitz relations", 0, [&] {
            TruncatedOperator bad = t;
            if (spec.n >= 2)
                bad.matrix(static_cast<Eigen::Index>(*bad.basis.index(Word{1})) * t.aux_dim,
                           static_cast<Eigen::Index>(*bad.basis.index(Word{2})) * t.aux_dim) += 0.1;
            else
                bad.matrix(0, 0) += 0.1;
            const ToeplitzReport r = is_multi_toeplitz(bad, table, o.tol);
            const double seen = std::max(r.worst_structure_residual, r.worst_incomparable_entry);
            return Outcome{(r.is_toeplitz ? 1.0 : 0.0) + std::max(0.0, 0.05 - seen), "residual " + fmt(seen), false};
        });
        rep.run(id + "norm-monotone", "||phi(t1 W)|| <= ||phi(t2 W)|| for t1 < t2", o.tol,
                [&] { return Outcome{std::max(0.0, norm_profile(sym, table, o.radii, N, o.tol).worst_violation)}; });
        rep.run(id + "hermitian-split", "a hermitian Toeplitz operator has B_a = A_a^*", o.tol, [&] {
            const TruncatedOperator h = t + t.adjoint();
            const auto [an, anti] = hermitian_part_split(h, table, o.tol);
            double worst = 0;
            for (const auto& [w, blk] : an.A)
                if (!w.empty()) worst = std::max(worst, (symbol_block(anti.B, w, h.aux_dim) - blk.adjoint()).norm());
            for (const auto& [w, blk] : anti.B) worst = std::max(worst, (symbol_block(an.A, w, h.aux_dim) - blk.adjoint()).norm());
            return Outcome{worst};
        });
    }
}

void berezin_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                    const std::optional<OperatorTuple>& tuple) {
    const std::string p = name + "/berezin/";
    const int N = o.N;
    const WeightTable table = weights_by_convolution(spec, N);
    Rng rng = area_rng(o, name, "berezin");
    const OperatorTuple x =
        tuple ? *tuple : scale_into_domain(spec, random_nilpotent_tuple(spec.n, tuple_dim(spec), rng));
    const MembershipReport mem = domain_membership(spec, x, o.tol);
    rep.run(p + "membership", "(id - Phi_{q,X})^k(I) >= 0 for k = 1..m", o.tol, [&] {
        const double low = *std::min_element(mem.min_eigenvalues.begin(), mem.min_eigenvalues.end());
        return Outcome{std::max(0.0, -low) + (mem.predicates_agree ? 0.0 : 1.0), "min eigenvalue " + fmt(low), false};
    });
    const bool certified = mem.purity.nilpotent_certificate;
    const int order = mem.purity.vanishing_order.value_or(N + 1);
    const bool exact = certified && N >= order + 1;
    rep.run(p + "purity", "Phi^p_{q,X}(I) -> 0", 1e-12, [&] {
        return Outcome{mem.purity.decay.back(), certified ? "nilpotent certificate" : "decay at p_max", false};
    });
    if (!mem.in_domain || !mem.purity.pure) return;
    const double id_tol = exact ? o.tol : 1e-6;
    const Matrix kernel = berezin_kernel(spec, x, N, o.tol);
    const Eigen::Index k = x.dim();
    rep.run(p + "kernel-isometry", "K^*K = I for pure X", id_tol, [&] {
        return Outcome{max_abs(kernel.adjoint() * kernel - Matrix::Identity(k, k)), {}, !exact};
    });
    rep.run(p + "intertwining", "K X_i^* = (W_i^* (x) I) K", id_tol,
            [&] { return Outcome{intertwining_residual(spec, x, N, o.tol), {}, !exact}; });
    rep.run(p + "reproducing", "B_X(W_a W_b^*) = X_a X_b^* for |a|, |b| <= 2", id_tol, [&] {
        const auto ops = left_creation_tuple(table, N);
        const auto xs = word_products(x, 2);
        double worst = 0;
        for (const Word& a : enumerate_words(spec.n, 2))
            for (const Word& b : enumerate_words(spec.n, 2)) {
                const TruncatedOperator g = word_operator(ops, a) * word_operator(ops, b).adjoint();
                const Matrix lhs = berezin_transform_with_kernel(kernel, k, g);
                worst = std::max(worst, operator_norm(lhs - xs[word_index(a, spec.n)] * xs[word_index(b, spec.n)].adjoint()));
            }
        return Outcome{worst, {}, !exact};
    });
    rep.run(p + "positivity", "B_X maps positive operators to positive operators", o.tol, [&] {
        double worst = 0;
        const FockBasis basis(spec.n, N);
        for (int s = 0; s < o.samples; ++s) {
            Matrix m = random_tuple(1, basis.dim(), rng)[0];
            const TruncatedOperator g(basis, 1, m * m.adjoint());
            worst = std::max(worst, -min_eigenvalue(berezin_transform_with_kernel(kernel, k, g)));
        }
        return Outcome{std::max(0.0, worst)};
    });
    rep.run(p + "von-neumann", "||q(X, X^*)|| <= ||q(W, W^*)||", 1e-8, [&] {
        double worst = 0;
        for (int s = 0; s < o.samples; ++s) {
            const HereditaryPolynomial poly = random_hereditary(spec.n, 2, 4, rng);
            worst = std::max(worst, operator_norm(poly.at_tuple(x)) - operator_norm(poly.at_model(table, N).matrix));
        }
        return Outcome{std::max(0.0, worst), {}, !exact};
    });
    for (double r : {0.5, 0.9}) {
        rep.run(p + "mean-value-r" + fmt(r), "F(X) = extended Berezin transform at X/r of F(rW)", 1e-8, [&] {
            double worst = 0;
            for (int s = 0; s < o.samples; ++s) {
                const MultiToeplitzSymbol f = random_symbol(spec.n, 2, o.aux_dim, false, rng);
                worst = std::max(worst, mean_value_check(f, spec, x.scaled(r), r, N, o.tol).residual);
            }
            return Outcome{worst, {}, !exact};
        });
    }
    rep.run(p + "boundary-limit", "B_{rX}[q(W, W^*)] -> q(X, X^*) as r -> 1", 1e-4, [&] {
        const HereditaryEvaluation ev = hereditary_eval(spec, x, random_hereditary(spec.n, 2, 4, rng), N, o.tol);
        return Outcome{ev.berezin_residual.value_or(std::nan("")), "linear extrapolation from r = 0.99, 0.999", true};
    });
}

void pluriharmonic_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec,
                          const SuiteOptions& o, const std::optional<MultiToeplitzSymbol>& symbol) {
    const std::string p = name + "/pluriharmonic/";
    const int N = o.N;
    const int order = std::min(2, N);
    const WeightTable table = weights_by_convolution(spec, N);
    Rng rng = area_rng(o, name, "pluriharmonic");
    MultiToeplitzSymbol f = symbol && symbol->analytic() ? *symbol
                                                         : random_symbol(spec.n, std::min(2, N - order), o.aux_dim, true, rng);
    rep.run(p + "radius-test", "limsup ||sum omega_b A_b^* A_b||^{1/2k} <= 1", 0,
            [&] { return flag(holomorphic_radius_test(f, table).pass); });
    const SchurReport schur = schur_positivity_test(f, table, {0.5, 0.9, 1.0}, order, N, o.tol);
    rep.run(p + "gamma-identity", "[Gamma_{rF}] is the compression of F(rW)^* + F(rW)", 1e-12,
            [&] { return Outcome{schur.worst_equality_residual}; });
    rep.run(p + "gamma-eigenvalues", "Gamma and the compression have the same spectrum", o.tol,
            [&] { return Outcome{schur.worst_eigenvalue_gap}; });
    rep.run(p + "schur-verdicts", "Re F >= 0 iff Gamma_{rF} >= 0 (1 + Z1 positive, Z1 not)", 0, [&] {
        const MultiToeplitzSymbol z1 = MultiToeplitzSymbol::monomial(Word{1}, 1.0);
        const MultiToeplitzSymbol one_z1 = MultiToeplitzSymbol::constant(1.0) + z1;
        const bool pos = schur_positivity_test(one_z1, table, {0.5, 1.0}, 1, N, o.tol).psd;
        const bool neg = schur_positivity_test(z1, table, {0.5, 1.0}, 1, N, o.tol).psd;
        return flag(pos && !neg);
    });
    rep.run(p + "metric-axioms", "rho is a metric", 1e-12, [&] {
        double worst = 0;
        for (int s = 0; s < o.samples; ++s) {
            const auto a = random_symbol(spec.n, 2, 1, false, rng);
            const auto b = random_symbol(spec.n, 2, 1, false, rng);
            const auto c = random_symbol(spec.n, 2, 1, false, rng);
            const double ab = distance(a, b, table, N).rho, ba = distance(b, a, table, N).rho;
            const double bc = distance(b, c, table, N).rho, ac = distance(a, c, table, N).rho;
            worst = std::max({worst, distance(a, a, table, N).rho, std::abs(ab - ba), ac - ab - bc, -ab});
        }
        return Outcome{std::max(0.0, worst)};
    });
    rep.run(p + "weierstrass", "uniform limits on rD of pluriharmonic functions are pluriharmonic", 0, [&] {
        std::vector<MultiToeplitzSymbol> seq;
        MultiToeplitzSymbol acc;
        for (int j = 1; j <= N; ++j) {
            acc = acc + MultiToeplitzSymbol::monomial(Word(std::vector<Letter>(static_cast<std::size_t>(j), 1)),
                                                      std::ldexp(1.0, -j));
            seq.push_back(acc);
        }
        const WeierstrassReport w = weierstrass_limit(seq, table, {0.5, 0.9}, N, 0.1);
        std::vector<MultiToeplitzSymbol> bad;
        for (int j = 1; j <= 6; ++j) bad.push_back(MultiToeplitzSymbol::monomial(Word{1}, static_cast<double>(j)));
        const WeierstrassReport d = weierstrass_limit(bad, table, {0.5, 0.9}, N, 0.1);
        return flag(w.converged && w.rho_monotone && !d.converged, w.diagnosis + "; " + d.diagnosis);
    });
    rep.run(p + "conjugate", "G + iH holomorphic and the conjugate of H is -G + G(0)", 1e-12, [&] {
        const PluriharmonicFunction g = PluriharmonicFunction::real_part(random_symbol(spec.n, 2, o.aux_dim, true, rng));
        const PluriharmonicFunction h = conjugate(g);
        const MultiToeplitzSymbol sum = g.symbol + Complex(0, 1) * h.symbol;
        double worst = 0;
        for (const auto& kv : sum.B) worst = std::max(worst, kv.second.norm());
        MultiToeplitzSymbol expect = Complex(-1.0) * g.symbol;
        expect.A[Word{}] = Matrix::Zero(o.aux_dim, o.aux_dim);
        worst = std::max(worst, symbol_distance(conjugate(h).symbol, expect));
        return Outcome{worst};
    });
    rep.run(p + "bounded-roundtrip", "F(X) = B_X[psi] with psi the boundary operator of F", o.tol, [&] {
        const OperatorTuple x = scale_into_domain(spec, random_nilpotent_tuple(spec.n, tuple_dim(spec), rng));
        const MultiToeplitzSymbol g = random_symbol(spec.n, 2, o.aux_dim, false, rng);
        const BoundedRoundtripReport b = bounded_roundtrip(g, spec, table, N, {0.5, 0.9, 0.99}, x, o.tol);
        return Outcome{b.berezin_residual + (b.radial_within_bound ? 0.0 : 1.0)};
    });
}

void cauchy_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                   const std::optional<OperatorTuple>& tuple) {
    const std::string p = name + "/cauchy/";
    const int N = o.N;
    const WeightTable table = weights_by_convolution(spec, N);
    Rng rng = area_rng(o, name, "cauchy");
    const int k = tuple_dim(spec);
    const OperatorTuple x = tuple ? *tuple : scale_to_spectral_radius(spec, random_tuple(spec.n, k, rng), 0.6);
    const SpectralRadiusReport jsr = joint_spectral_radius(spec, x);
    rep.run(p + "spectral-radius-oracle", "r_f = lim ||Phi^k(I)||^{1/2k}", 5e-2, [&] {
        return Outcome{std::abs(jsr.r_f_exact - jsr.r_f_sequence.back()), "r_f " + fmt(jsr.r_f_exact), false};
    });
    rep.run(p + "nilpotent-radius", "r_f = 0 for jointly nilpotent X", 0, [&] {
        return Outcome{joint_spectral_radius(spec, random_nilpotent_tuple(spec.n, k, rng)).r_f_exact};
    });
    rep.run(p + "radius-inequality", "||R^k|| <= ||Phi^k_{q,X}(I)||^{1/2}", 0,
            [&] { return Outcome{static_cast<double>(radius_inequality_check(spec, x, table, N).violations)}; });
    if (!jsr.gate) {
        rep.run(p + "gate", "r_f(X) < 1", 0, [&] { return flag(false, "r_f " + fmt(jsr.r_f_exact)); });
        return;
    }
    const CauchyKernel ck = cauchy_kernel(spec, x, table, N);
    rep.run(p + "kernel-expansion", "C = sum b_a Lambda_{a~} (x) X_a^*", o.tol, [&] { return Outcome{ck.fourier_residual}; });
    rep.run(p + "reproducing", "Cauchy transform of W_a is X_a for |a| <= 3", o.tol, [&] {
        const auto ops = left_creation_tuple(table, N);
        const auto xs = word_products(x, std::min(3, N));
        double worst = 0;
        for (const Word& a : enumerate_words(spec.n, std::min(3, N)))
            worst = std::max(worst, operator_norm(cauchy_transform(ck.kernel, word_operator(ops, a)) - xs[word_index(a, spec.n)]));
        return Outcome{worst};
    });
    rep.run(p + "route-agreement", "direct series equals the Cauchy route at tX", 1e-8, [&] {
        double worst = 0;
        for (int s = 0; s < o.samples; ++s) {
            const auto f = random_symbol(spec.n, std::min(3, N - 1), 1, true, rng);
            worst = std::max(worst, analytic_functional_calculus(spec, x, f, table, N).residual);
        }
        return Outcome{worst};
    });
    rep.run(p + "multiplicative", "(F1 F2)(X) = F1(X) F2(X)", 1e-8, [&] {
        double worst = 0;
        for (int s = 0; s < o.samples; ++s) {
            const auto f1 = random_symbol(spec.n, std::min(2, N / 2), 1, true, rng);
            const auto f2 = random_symbol(spec.n, std::min(2, N / 2), 1, true, rng);
            const Matrix prod = analytic_functional_calculus(spec, x, symbol_product(f1, f2), table, N).cauchy_value;
            const Matrix a = analytic_functional_calculus(spec, x, f1, table, N).cauchy_value;
            const Matrix b = analytic_functional_calculus(spec, x, f2, table, N).cauchy_value;
            worst = std::max(worst, operator_norm(prod - a * b));
        }
        return Outcome{worst};
    });
    rep.run(p + "pluriharmonic-bound", "||G(X)|| <= (||E(W/t)|| + ||F(W/t)||) ||C_{tX}||", 0, [&] {
        PluriharmonicFunction g;
        g.symbol = random_symbol(spec.n, 2, 1, false, rng);
        const PluriharmonicCalculusResult r = pluriharmonic_calculus(spec, x, g, table, N, o.tol);
        return Outcome{std::max(0.0, r.norm - r.bound - o.tol), fmt(r.norm) + " <= " + fmt(r.bound), false};
    });
    rep.run(p + "two-c-minus-i", "<F(X)x, y> = <(G(W/t) (x) I)(1 (x) x), (2C_{tX} - I)(1 (x) y)>", 1e-8, [&] {
        MultiToeplitzSymbol f = random_symbol(spec.n, 2, 1, true, rng);
        f.A[Word{}](0, 0) = f.A[Word{}](0, 0).real();
        return Outcome{two_c_minus_i_residual(spec, x, f, table, N)};
    });
    rep.run(p + "berezin-consistency", "Cauchy calculus and Berezin transform agree on pure X", 1e-8, [&] {
        const OperatorTuple y = scale_into_domain(spec, random_nilpotent_tuple(spec.n, k, rng));
        const auto f = random_symbol(spec.n, 2, 1, true, rng);
        const Matrix viaC = analytic_functional_calculus(spec, y, f, table, N).cauchy_value;
        const Matrix viaB = berezin_transform(spec, y, symbol_to_operator(f, table, 1.0, N), o.tol).value;
        return Outcome{operator_norm(viaC - viaB)};
    });
}

VerificationReport verify_all(const SuiteOptions& o) {
    VerificationReport rep("verify-all");
    rep.set_seed(o.seed);
    rep.config()["N"] = o.N;
    rep.config()["aux_dim"] = o.aux_dim;
    rep.config()["tol"] = o.tol;
    rep.config()["samples"] = o.samples;
    Json corpus = Json::array();
    for (const auto& entry : builtin_corpus()) {
        corpus.push_back(entry.spec.describe());
        weights_checks(rep, entry.name, entry.spec, o);
        model_checks(rep, entry.name, entry.spec, o);
        toeplitz_checks(rep, entry.name, entry.spec, o);
        berezin_checks(rep, entry.name, entry.spec, o);
        pluriharmonic_checks(rep, entry.name, entry.spec, o);
        cauchy_checks(rep, entry.name, entry.spec, o);
    }
    rep.config()["corpus"] = std::move(corpus);
    return rep;
}

}  // namespace ncd
