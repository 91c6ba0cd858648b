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

// Acceptance harness: one PASS/FAIL line per criterion.

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ncd/berezin.hpp"
#include "ncd/cauchy.hpp"
#include "ncd/generators.hpp"
#include "ncd/pluriharmonic.hpp"
#include "ncd/suite.hpp"
#include "ncd/toeplitz.hpp"

using namespace ncd;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

Matrix product_of(const OperatorTuple& x, const Word& w) {
    Matrix p = Matrix::Identity(x.dim(), x.dim());
    for (std::size_t i = 0; i < w.length(); ++i) p = p * x[static_cast<std::size_t>(w[i] - 1)];
    return p;
}

double svd_norm(const Matrix& m) {
    if (m.size() == 0) return 0;
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double min_eig(const Matrix& h) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly).eigenvalues()(0);
}

std::vector<DomainSpec> corpus_specs() {
    std::vector<DomainSpec> out;
    for (const auto& e : builtin_corpus()) out.push_back(e.spec);
    return out;
}

// Kept small enough that every criterion runs in seconds.
int depth_for(int n) { return n == 1 ? 6 : n == 2 ? 5 : 4; }

Verdict weight_oracles() {
    Verdict v;
    std::vector<DomainSpec> specs = corpus_specs();
    Rng rng(1001);
    for (int i = 0; i < 20; ++i) specs.push_back(random_spec(1 + i % 3, 1 + (i / 3) % 3, 3, rng));
    std::size_t compared = 0;
    for (const auto& s : specs) {
        const int N = depth_for(s.n);
        const WeightTable f = weights_by_factorization(s, N);
        const WeightTable c = weights_by_convolution(s, N);
        for (const Word& w : enumerate_words(s.n, N)) {
            v.require(f(w) == c(w), "spec " + s.describe() + " word " + w.to_string());
            ++compared;
        }
    }
    v.detail << specs.size() << " specs, " << compared << " weights compared exactly";
    return v;
}

Verdict hyperball_closed_form() {
    Verdict v;
    std::size_t compared = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            const DomainSpec s = DomainSpec::hyperball(n, m);
            const WeightTable f = weights_by_factorization(s, 6);
            const WeightTable c = weights_by_convolution(s, 6);
            for (const Word& w : enumerate_words(n, 6)) {
                const Rational expect = binomial(static_cast<long>(w.length()) + m - 1, m - 1);
                v.require(f(w) == expect && c(w) == expect, "n=" + std::to_string(n) + " m=" + std::to_string(m));
                ++compared;
            }
        }
    v.detail << compared << " weights at N = 6";
    return v;
}

Verdict defect_identity() {
    Verdict v;
    double worst = 0;
    for (const auto& s : corpus_specs()) {
        const int N = 5;
        const WeightTable t = weights_by_convolution(s, N);
        const auto ops = left_creation_tuple(t, N);
        const Eigen::Index D = ops.front().matrix.rows();
        auto phi = [&](const Matrix& y) {
            Matrix out = Matrix::Zero(D, D);
            for (const auto& [w, a] : s.coefficients) {
                const Matrix p = word_operator(ops, w).matrix;
                out += a.get_d() * p * y * p.adjoint();
            }
            return out;
        };
        Matrix y = Matrix::Identity(D, D);
        for (int j = 0; j < s.m; ++j) y = y - phi(y);
        Matrix vac = Matrix::Zero(D, D);
        vac(0, 0) = 1;
        const double res = max_abs(y - vac);
        worst = std::max(worst, res);
        v.require(res <= 1e-10, s.describe());
    }
    v.detail << "worst max-entry residual " << sci(worst);
    return v;
}

Verdict commutant_identity() {
    Verdict v;
    double worst = 0;
    for (const auto& s : corpus_specs()) {
        const int N = 5;
        const WeightTable t = weights_by_convolution(s, N);
        const FockBasis b(s.n, N);
        for (int i = 1; i <= s.n; ++i)
            for (int j = 1; j <= s.n; ++j) {
                const Matrix w = weighted_left_creation(t, i, N).matrix;
                const Matrix l = weighted_right_creation(t, j, N).matrix;
                const Matrix comm = w * l - l * w;
                for (const Word& g : enumerate_words(s.n, N - 2)) {
                    const double res = comm.col(static_cast<Eigen::Index>(*b.index(g))).norm();
                    worst = std::max(worst, res);
                    v.require(res <= 1e-12, s.describe() + " at " + g.to_string());
                }
            }
    }
    v.detail << "worst ||(W_i L_j - L_j W_i) e_g|| " << sci(worst);
    return v;
}

Verdict toeplitz_roundtrip() {
    Verdict v;
    Rng rng(1005);
    const auto specs = corpus_specs();
    double worst_block = 0, worst_structure = 0, weakest_rejection = 1e300;
    for (int trial = 0; trial < 20; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const int N = 4;
        const WeightTable t = weights_by_convolution(s, N);
        const auto sym = random_symbol(s.n, N, 1 + trial % 2, false, rng);
        const TruncatedOperator op = symbol_to_operator(sym, t, 1.0, N);
        const auto back = fourier_coefficients(op, t, N);
        for (const Word& w : enumerate_words(s.n, N)) {
            worst_block = std::max(worst_block, max_abs(symbol_block(back.A, w, sym.aux_dim) - symbol_block(sym.A, w, sym.aux_dim)));
            if (!w.empty())
                worst_block = std::max(worst_block, max_abs(symbol_block(back.B, w, sym.aux_dim) - symbol_block(sym.B, w, sym.aux_dim)));
        }
        const auto clean = is_multi_toeplitz(op, t, 1e-12);
        worst_structure = std::max({worst_structure, clean.worst_structure_residual, clean.worst_incomparable_entry});
        v.require(clean.is_toeplitz, "constructed operator rejected for " + s.describe());

        TruncatedOperator bad = op;
        // With one letter every pair is comparable, so the vacuum entry is perturbed instead.
        const std::size_t row = s.n > 1 ? *bad.basis.index(Word{1}) : 0;
        const std::size_t col = s.n > 1 ? *bad.basis.index(Word{2}) : 0;
        Matrix blk = bad.block(row, col);
        blk(0, 0) += 0.1;
        bad.set_block(row, col, blk);
        const auto rep = is_multi_toeplitz(bad, t);
        const double residual = std::max(rep.worst_structure_residual, rep.worst_incomparable_entry);
        weakest_rejection = std::min(weakest_rejection, residual);
        v.require(!rep.is_toeplitz && residual >= 0.05, "perturbation accepted for " + s.describe());
    }
    v.require(worst_block <= 1e-10, "roundtrip block error " + sci(worst_block));
    v.require(worst_structure <= 1e-12, "structure residual " + sci(worst_structure));
    v.detail << "roundtrip " << sci(worst_block) << ", structure " << sci(worst_structure) << ", weakest rejection "
             << sci(weakest_rejection);
    return v;
}

Verdict norm_monotonicity() {
    Verdict v;
    Rng rng(1006);
    const auto specs = corpus_specs();
    const std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const int N = 5;
        const WeightTable t = weights_by_convolution(s, N);
        const auto sym = random_symbol(s.n, 3, 1 + trial % 2, trial % 3 == 0, rng);
        std::vector<double> norms;
        for (double r : grid) norms.push_back(svd_norm(symbol_to_operator(sym, t, r, N).matrix));
        for (std::size_t a = 0; a < grid.size(); ++a)
            for (std::size_t b = a + 1; b < grid.size(); ++b) {
                worst = std::max(worst, norms[a] - norms[b]);
                v.require(norms[a] <= norms[b] + 1e-10, "symbol " + std::to_string(trial));
            }
        const NormProfile p = norm_profile(sym, t, grid, N);
        v.require(p.monotone, "norm_profile flagged symbol " + std::to_string(trial));
        for (std::size_t j = 0; j < grid.size(); ++j)
            v.require(std::abs(p.norms[j] - norms[j]) <= 1e-10 * std::max(1.0, norms[j]), "profile disagrees with SVD");
    }
    v.detail << "20 symbols, worst ||phi(t1 W)|| - ||phi(t2 W)|| = " << sci(worst);
    return v;
}

Verdict berezin_reproducing() {
    Verdict v;
    Rng rng(1007);
    double worst_rep = 0, worst_iso = 0, worst_int = 0;
    for (const auto& s : corpus_specs()) {
        for (int sample = 0; sample < 2; ++sample) {
            const OperatorTuple x = scale_into_domain(s, random_nilpotent_tuple(s.n, 3, rng), 0.9);
            const auto d = nilpotency_order(x, 10);
            v.require(d.has_value() && *d <= 3, "nilpotency order");
            const int N = (d ? *d : 3) + 2;
            const auto pur = purity_check(s, x);
            v.require(pur.pure && pur.nilpotent_certificate, "purity certificate");
            const WeightTable t = weights_by_convolution(s, N);
            const auto ops = left_creation_tuple(t, N);
            const Matrix k = berezin_kernel(s, x, N);
            for (const Word& a : enumerate_words(s.n, 2))
                for (const Word& b : enumerate_words(s.n, 2)) {
                    const auto g = word_operator(ops, a) * word_operator(ops, b).adjoint();
                    const double r = svd_norm(berezin_transform_with_kernel(k, x.dim(), g) - product_of(x, a) * product_of(x, b).adjoint());
                    worst_rep = std::max(worst_rep, r);
                }
            worst_iso = std::max(worst_iso, max_abs(k.adjoint() * k - Matrix::Identity(x.dim(), x.dim())));
            worst_int = std::max(worst_int, intertwining_residual(s, x, N));
        }
    }
    v.require(worst_rep <= 1e-10, "reproducing residual");
    v.require(worst_iso <= 1e-10, "K^*K residual");
    v.require(worst_int <= 1e-10, "intertwining residual");
    v.detail << "reproducing " << sci(worst_rep) << ", K^*K - I " << sci(worst_iso) << ", intertwining " << sci(worst_int);
    return v;
}

Verdict von_neumann() {
    Verdict v;
    Rng rng(1008);
    const auto specs = corpus_specs();
    double tightest = 1e300;
    for (int trial = 0; trial < 20; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const OperatorTuple x = scale_into_domain(s, random_nilpotent_tuple(s.n, 3, rng), 0.95);
        const auto q = random_hereditary(s.n, 2, 4, rng);
        const int d = nilpotency_order(x, 10).value_or(3);
        const int N = std::max(1, d - 1 + static_cast<int>(q.degree()));
        Matrix direct = Matrix::Zero(x.dim(), x.dim());
        for (const auto& term : q.terms) direct += term.c * product_of(x, term.alpha) * product_of(x, term.beta).adjoint();
        const double lhs = svd_norm(direct);
        const double rhs = svd_norm(q.at_model(weights_by_convolution(s, N), N).matrix);
        tightest = std::min(tightest, rhs - lhs);
        v.require(lhs <= rhs + 1e-8, "polynomial " + q.describe());
    }
    v.detail << "20 polynomials, smallest slack " << sci(tightest);
    return v;
}

Verdict mean_value() {
    Verdict v;
    Rng rng(1009);
    const auto specs = corpus_specs();
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const auto sym = random_symbol(s.n, 3, 1 + trial % 2, trial % 2 == 0, rng);
        const OperatorTuple y = scale_into_domain(s, random_nilpotent_tuple(s.n, 3, rng), 0.9);
        for (double r : {0.5, 0.9}) {
            const auto rep = mean_value_check(sym, s, y.scaled(r), r, 5);
            worst = std::max(worst, rep.residual);
            v.require(rep.residual <= 1e-8, "symbol " + std::to_string(trial) + " r=" + std::to_string(r));
        }
    }
    v.detail << "10 symbols x 2 radii, worst residual " << sci(worst);
    return v;
}

Verdict gamma_identity() {
    Verdict v;
    Rng rng(1010);
    const auto specs = corpus_specs();
    const int N = 5, q = 2;
    double worst_eq = 0, worst_eig = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const WeightTable t = weights_by_convolution(s, N);
        const auto f = random_symbol(s.n, N - q, 1 + trial % 2, true, rng);
        for (double r : {0.5, 0.9, 1.0}) {
            const GammaKernel g = gamma_kernel(f, t, r, q);
            const TruncatedOperator op = symbol_to_operator(f, t, r, N);
            const Matrix sum = op.matrix + op.matrix.adjoint();
            const Eigen::Index rows = g.blocks.rows();
            const Matrix compression = sum.topLeftCorner(rows, rows);
            worst_eq = std::max(worst_eq, max_abs(g.blocks - compression));
            worst_eig = std::max(worst_eig, std::abs(min_eig(g.blocks) - min_eig(compression)));
        }
    }
    v.require(worst_eq <= 1e-12, "entrywise identity " + sci(worst_eq));
    v.require(worst_eig <= 1e-10, "eigenvalue agreement " + sci(worst_eig));
    const WeightTable hb = hyperball_weights(2, 1, N);
    const std::vector<double> radii{0.5, 0.9, 0.99};
    const auto z1 = schur_positivity_test(MultiToeplitzSymbol::monomial(Word{1}, 1.0), hb, radii, 1, N);
    const auto one_z1 = schur_positivity_test(MultiToeplitzSymbol::constant(1.0) + MultiToeplitzSymbol::monomial(Word{1}, 1.0),
                                              hb, radii, 1, N);
    v.require(!z1.psd, "Z_1 reported PSD");
    v.require(one_z1.psd, "1 + Z_1 reported non-PSD");
    v.detail << "entrywise " << sci(worst_eq) << ", eigenvalues " << sci(worst_eig) << ", Z_1 psd=" << z1.psd
             << ", 1+Z_1 psd=" << one_z1.psd;
    return v;
}

Verdict cauchy_calculus() {
    Verdict v;
    Rng rng(1011);
    const auto specs = corpus_specs();
    const int N = 5;
    double worst_rep = 0, worst_route = 0, worst_mult = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const WeightTable t = weights_by_convolution(s, N);
        const OperatorTuple x = scale_to_spectral_radius(s, random_tuple(s.n, 3, rng), 0.7);
        const auto jsr = joint_spectral_radius(s, x);
        v.require(jsr.gate, "gate failed");
        const auto c = cauchy_kernel(s, x, t, N);
        const auto ops = left_creation_tuple(t, N);
        for (const Word& a : enumerate_words(s.n, 3))
            worst_rep = std::max(worst_rep, svd_norm(cauchy_transform(c.kernel, word_operator(ops, a)) - product_of(x, a)));
        const auto f1 = random_symbol(s.n, 2, 1, true, rng);
        const auto f2 = random_symbol(s.n, 2, 1, true, rng);
        const auto r1 = analytic_functional_calculus(s, x, f1, t, N);
        const auto r2 = analytic_functional_calculus(s, x, f2, t, N);
        const auto r12 = analytic_functional_calculus(s, x, symbol_product(f1, f2), t, N);
        worst_route = std::max({worst_route, r1.residual, r2.residual, r12.residual});
        worst_mult = std::max(worst_mult, svd_norm(r12.value - r1.value * r2.value));
    }
    v.require(worst_rep <= 1e-10, "C(W_a) = X_a");
    v.require(worst_route <= 1e-8, "route agreement");
    v.require(worst_mult <= 1e-8, "multiplicativity");
    v.detail << "C(W_a) - X_a " << sci(worst_rep) << ", routes " << sci(worst_route) << ", multiplicativity " << sci(worst_mult);
    return v;
}

Verdict spectral_radius_criterion() {
    Verdict v;
    double worst_scalar = 0, worst_seq = 0;
    for (Complex lam : {Complex(0.0), Complex(0.25), Complex(-0.5), Complex(0.3, 0.4), Complex(0, 0.99)}) {
        const auto rep = joint_spectral_radius(DomainSpec::hyperball(1, 2), OperatorTuple{{Matrix::Constant(1, 1, lam)}});
        worst_scalar = std::max(worst_scalar, std::abs(rep.r_f_exact - std::abs(lam)));
    }
    v.require(worst_scalar <= 1e-15, "scalar case " + sci(worst_scalar));
    Rng rng(1012);
    int violations = 0;
    const auto specs = corpus_specs();
    for (int trial = 0; trial < 10; ++trial) {
        const DomainSpec& s = specs[static_cast<std::size_t>(trial) % specs.size()];
        const OperatorTuple x = scale_into_domain(s, random_tuple(s.n, 3, rng), 0.95);
        const auto rep = joint_spectral_radius(s, x, 40);
        worst_seq = std::max(worst_seq, std::abs(rep.r_f_exact - rep.r_f_sequence.back()));
        const int N = 5;
        violations += radius_inequality_check(s, x, weights_by_convolution(s, N), N).violations;
    }
    v.require(worst_seq <= 5e-2, "Gelfand sequence gap " + sci(worst_seq));
    v.require(violations == 0, std::to_string(violations) + " radius inequality violations");
    v.detail << "scalar " << sci(worst_scalar) << ", k = 40 gap " << sci(worst_seq) << ", violations " << violations;
    return v;
}

Verdict metric_rho() {
    Verdict v;
    Rng rng(1013);
    const int N = 4;
    const WeightTable t = hyperball_weights(2, 2, N);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_symbol(2, 3, 1 + trial % 2, trial % 2 == 0, rng);
        auto g = random_symbol(2, 3, f.aux_dim, trial % 2 == 0, rng);
        const auto h = random_symbol(2, 3, f.aux_dim, false, rng);
        if (trial == 0) g = f;
        const double fg = distance(f, g, t, N).rho, gf = distance(g, f, t, N).rho;
        const double fh = distance(f, h, t, N).rho, hg = distance(h, g, t, N).rho;
        v.require(distance(f, f, t, N).rho == 0, "rho(F, F) != 0");
        v.require(fg >= 0 && fg == gf, "symmetry");
        v.require(fg <= fh + hg, "triangle inequality");
        v.require((fg == 0) == (symbol_distance(f, g) == 0), "rho = 0 iff equal symbols");
    }
    std::vector<MultiToeplitzSymbol> family;
    const auto target = MultiToeplitzSymbol::monomial(Word{1}, 1.0) + MultiToeplitzSymbol::monomial(Word{2, 1}, 0.5);
    for (int j = 1; j <= 40; ++j) family.push_back(Complex(1.0 - std::ldexp(1.0, -j)) * target);
    const auto w = weierstrass_limit(family, t, {0.5, 0.9, 0.99}, N, 1e-6);
    v.require(w.converged, "Weierstrass family did not converge: " + w.diagnosis);
    v.require(w.rho_monotone, "rho(F_j, F) not monotone");
    v.require(!w.rho_to_limit.empty() && w.rho_to_limit.back() == 0, "rho to limit does not reach 0");
    std::vector<double> to_target;
    for (const auto& fj : family) to_target.push_back(distance(fj, target, t, N).rho);
    for (std::size_t j = 1; j < to_target.size(); ++j) v.require(to_target[j] <= to_target[j - 1], "decrease toward F");
    v.require(to_target.back() <= 1e-10, "rho(F_J, F) = " + sci(to_target.back()));
    v.detail << "20 triples exact; Weierstrass family rho(F_1, F) = " << sci(to_target.front()) << " -> "
             << sci(to_target.back()) << " monotone";
    return v;
}

Verdict verify_all_run(const std::string& cli) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    std::size_t checks = 0, fails = 0;
    std::string how;
    if (!cli.empty()) {
        const std::string cmd = "\"" + cli + "\" verify-all --max-len 5 --format json";
        std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
        std::string out;
        char buf[4096];
        std::size_t got = 0;
        while (pipe && (got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
        const int status = pipe ? pclose(pipe.release()) : -1;
        v.require(status == 0, "verify-all exit status " + std::to_string(status));
        try {
            const Json j = Json::parse(out);
            checks = j["checks"].size();
            fails = j["summary"]["fail"].get<std::size_t>();
        } catch (const std::exception& e) {
            v.require(false, std::string("unreadable report: ") + e.what());
        }
        how = "CLI";
    } else {
        SuiteOptions o;
        o.N = 5;
        const VerificationReport rep = verify_all(o);
        checks = rep.records().size();
        fails = rep.count(Status::Fail);
        how = "library";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(checks > 0, "no checks ran");
    v.require(fails == 0, std::to_string(fails) + " failed checks");
    v.require(secs < 600, "took " + std::to_string(secs) + " s");
    v.detail << how << " run, " << checks << " checks, " << fails << " failures, " << std::fixed << std::setprecision(1)
             << secs << " s";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"weight oracle equivalence", weight_oracles},
        {"hyperball closed form", hyperball_closed_form},
        {"defect identity", defect_identity},
        {"commutant identity", commutant_identity},
        {"toeplitz roundtrip", toeplitz_roundtrip},
        {"norm monotonicity", norm_monotonicity},
        {"berezin reproducing", berezin_reproducing},
        {"von neumann inequality", von_neumann},
        {"mean value property", mean_value},
        {"gamma-kernel identity", gamma_identity},
        {"cauchy calculus", cauchy_calculus},
        {"spectral radius", spectral_radius_criterion},
        {"metric rho", metric_rho},
        {"verify-all", [&] { return verify_all_run(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << i + 1 << "  " << criteria[i].first
                  << "  (" << v.detail.str() << "; " << std::fixed << std::setprecision(2) << secs << " s)\n"
                  << std::defaultfloat << std::flush;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
