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

#include "ncd/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncd/errors.hpp"

namespace ncd {

void MultiToeplitzSymbol::validate() const {
    if (aux_dim < 1) throw ValidationError("symbol: aux_dim must be >= 1");
    auto check = [&](const std::map<Word, Matrix>& part, const char* name) {
        for (const auto& [w, blk] : part)
            if (blk.rows() != aux_dim || blk.cols() != aux_dim)
                throw ValidationError(std::string("symbol: block ") + name + "_" + w.to_string() + " is not " +
                                      std::to_string(aux_dim) + "x" + std::to_string(aux_dim));
    };
    check(A, "A");
    check(B, "B");
    if (B.count(Word{})) throw ValidationError("symbol: B has no constant term");
}

std::size_t MultiToeplitzSymbol::support_length() const {
    std::size_t len = 0;
    for (const auto& kv : A) len = std::max(len, kv.first.length());
    for (const auto& kv : B) len = std::max(len, kv.first.length());
    return len;
}

MultiToeplitzSymbol MultiToeplitzSymbol::constant(Complex c) {
    MultiToeplitzSymbol s;
    s.A[Word{}] = Matrix::Constant(1, 1, c);
    return s;
}

MultiToeplitzSymbol MultiToeplitzSymbol::monomial(const Word& alpha, Complex c) {
    MultiToeplitzSymbol s;
    s.A[alpha] = Matrix::Constant(1, 1, c);
    return s;
}

std::pair<double, double> MultiToeplitzSymbol::summability(const WeightTable& table) const {
    double a = 0, b = 0;
    for (const auto& [w, blk] : A) a += blk.squaredNorm() / table.as_double(w);
    for (const auto& [w, blk] : B) b += blk.squaredNorm() / table.as_double(w);
    return {a, b};
}

Matrix symbol_block(const std::map<Word, Matrix>& part, const Word& w, int aux_dim) {
    auto it = part.find(w);
    return it == part.end() ? Matrix::Zero(aux_dim, aux_dim) : it->second;
}

MultiToeplitzSymbol operator+(const MultiToeplitzSymbol& a, const MultiToeplitzSymbol& b) {
    if (a.aux_dim != b.aux_dim) throw DimensionMismatch("symbol sum: aux_dim differs");
    MultiToeplitzSymbol out = a;
    for (const auto& [w, blk] : b.A) out.A[w] = symbol_block(out.A, w, a.aux_dim) + blk;
    for (const auto& [w, blk] : b.B) out.B[w] = symbol_block(out.B, w, a.aux_dim) + blk;
    return out;
}

MultiToeplitzSymbol operator*(Complex s, const MultiToeplitzSymbol& a) {
    MultiToeplitzSymbol out = a;
    for (auto& kv : out.A) kv.second *= s;
    for (auto& kv : out.B) kv.second *= s;
    return out;
}

MultiToeplitzSymbol symbol_adjoint(const MultiToeplitzSymbol& s) {
    MultiToeplitzSymbol out;
    out.aux_dim = s.aux_dim;
    for (const auto& [w, blk] : s.A) {
        if (w.empty())
            out.A[w] = blk.adjoint();
        else
            out.B[w] = blk.adjoint();
    }
    for (const auto& [w, blk] : s.B) out.A[w] = blk.adjoint();
    return out;
}

MultiToeplitzSymbol symbol_product(const MultiToeplitzSymbol& f1, const MultiToeplitzSymbol& f2) {
    if (!f1.analytic() || !f2.analytic()) throw ValidationError("symbol_product: analytic symbols only");
    if (f1.aux_dim != f2.aux_dim) throw DimensionMismatch("symbol_product: aux_dim differs");
    MultiToeplitzSymbol out;
    out.aux_dim = f1.aux_dim;
    for (const auto& [u, a] : f1.A) {
        for (const auto& [v, b] : f2.A) {
            const Word w = concat(u, v);
            out.A[w] = symbol_block(out.A, w, out.aux_dim) + a * b;
        }
    }
    return out;
}

MultiToeplitzSymbol pruned(const MultiToeplitzSymbol& s, double tol) {
    MultiToeplitzSymbol out;
    out.aux_dim = s.aux_dim;
    for (const auto& [w, blk] : s.A)
        if (blk.norm() > tol) out.A[w] = blk;
    for (const auto& [w, blk] : s.B)
        if (blk.norm() > tol) out.B[w] = blk;
    return out;
}

double symbol_distance(const MultiToeplitzSymbol& a, const MultiToeplitzSymbol& b) {
    if (a.aux_dim != b.aux_dim) throw DimensionMismatch("symbol_distance: aux_dim differs");
    double worst = 0;
    auto scan = [&](const std::map<Word, Matrix>& x, const std::map<Word, Matrix>& y) {
        for (const auto& [w, blk] : x) worst = std::max(worst, (blk - symbol_block(y, w, a.aux_dim)).norm());
    };
    scan(a.A, b.A);
    scan(b.A, a.A);
    scan(a.B, b.B);
    scan(b.B, a.B);
    return worst;
}

namespace {

void require_compatible(const TruncatedOperator& t, const WeightTable& table) {
    if (t.basis.n() != table.n() || t.basis.max_length() > table.max_length())
        throw DimensionMismatch("operator basis does not match the weight table");
}

std::string pair_label(const Word& omega, const Word& gamma) {
    return "(" + omega.to_string() + ", " + gamma.to_string() + ")";
}

}  // namespace

ToeplitzReport is_multi_toeplitz(const TruncatedOperator& t, const WeightTable& table, double tol) {
    require_compatible(t, table);
    ToeplitzReport rep;
    const auto& words = t.basis.words();
    const std::size_t D = words.size();
    const int N = t.basis.max_length();

    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) rep.scale = std::max(rep.scale, t.block(i, j).norm());

    for (std::size_t oi = 0; oi < D; ++oi) {
        const Word& omega = words[oi];
        for (std::size_t gi = 0; gi < D; ++gi) {
            const Word& gamma = words[gi];
            const Comparability c = compare_right(omega, gamma);
            if (!c.comparable()) {
                const double e = t.block(oi, gi).norm();
                if (e > rep.worst_incomparable_entry) {
                    rep.worst_incomparable_entry = e;
                    rep.incomparable_witness = pair_label(omega, gamma);
                }
                continue;
            }
            if (static_cast<int>(omega.length()) > N - 1 || static_cast<int>(gamma.length()) > N - 1) continue;
            const bool geq = c.kind == Comparability::Kind::GeqR;
            const double lam = geq ? table.sqrt_ratio(omega, gamma) : table.sqrt_ratio(gamma, omega);
            const Matrix base = lam * t.block(oi, gi);
            for (int letter = 1; letter <= table.n(); ++letter) {
                const Word g = Word::generator(letter);
                const Word o2 = concat(omega, g), g2 = concat(gamma, g);
                const double lam2 = geq ? table.sqrt_ratio(o2, g2) : table.sqrt_ratio(g2, o2);
                const double e = (lam2 * t.block(*t.basis.index(o2), *t.basis.index(g2)) - base).norm();
                if (e > rep.worst_structure_residual) {
                    rep.worst_structure_residual = e;
                    rep.structure_witness = pair_label(omega, gamma) + " x g" + std::to_string(letter);
                }
            }
        }
    }
    const double bound = tol * std::max(rep.scale, 1.0);
    rep.is_toeplitz = rep.worst_structure_residual <= bound && rep.worst_incomparable_entry <= bound;
    return rep;
}

MultiToeplitzSymbol fourier_coefficients(const TruncatedOperator& t, const WeightTable& table, int max_order) {
    require_compatible(t, table);
    if (max_order < 0 || max_order > t.basis.max_length())
        throw TruncationExceeded("fourier_coefficients: order " + std::to_string(max_order) + " exceeds N");
    MultiToeplitzSymbol out;
    out.aux_dim = t.aux_dim;
    const auto& words = t.basis.words();
    for (std::size_t k = 0; k < words.size(); ++k) {
        const Word& alpha = words[k];
        if (static_cast<int>(alpha.length()) > max_order) break;
        const double s = std::sqrt(table(alpha).get_d());
        out.A[alpha] = s * t.block(k, 0);
        if (!alpha.empty()) out.B[alpha] = s * t.block(0, k);
    }
    return out;
}

TruncatedOperator symbol_to_operator(const MultiToeplitzSymbol& sym, const WeightTable& table, double r, int N) {
    sym.validate();
    const auto len = static_cast<int>(sym.support_length());
    if (len > N) throw TruncationExceeded("symbol support length " + std::to_string(len) + " exceeds N = " + std::to_string(N));
    const OperatorTuple w = as_tuple(left_creation_tuple(table, N));
    const std::vector<Matrix> prods = word_products(w, len);
    const FockBasis basis(table.n(), N);
    TruncatedOperator out = TruncatedOperator::zero(basis, sym.aux_dim);
    auto product = [&](const Word& alpha) -> const Matrix& {
        if (!alpha.within_alphabet(table.n())) throw ValidationError("symbol word " + alpha.to_string() + " outside the alphabet");
        return prods[word_index(alpha, table.n())];
    };
    for (const auto& [alpha, blk] : sym.A)
        out.matrix += std::pow(r, static_cast<double>(alpha.length())) * kron(product(alpha), blk);
    for (const auto& [alpha, blk] : sym.B)
        out.matrix += std::pow(r, static_cast<double>(alpha.length())) * kron(product(alpha).adjoint(), blk);
    return out;
}

NormProfile norm_profile(const MultiToeplitzSymbol& sym, const WeightTable& table, const std::vector<double>& radii,
                         int N, double tol) {
    NormProfile p;
    p.radii = radii;
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (radii[j] < 0 || radii[j] > 1) throw ValidationError("norm_profile: radii must lie in [0, 1]");
        if (j > 0 && radii[j] <= radii[j - 1]) throw ValidationError("norm_profile: radii must be increasing");
        p.norms.push_back(operator_norm(symbol_to_operator(sym, table, radii[j], N).matrix));
    }
    for (std::size_t j = 1; j < p.norms.size(); ++j) {
        p.worst_violation = std::max(p.worst_violation, p.norms[j - 1] - p.norms[j]);
    }
    p.monotone = p.worst_violation <= tol;
    if (!p.norms.empty()) p.sup_estimate = p.norms.back();
    if (p.norms.size() >= 2) {
        const std::size_t k = p.norms.size() - 1;
        const double slope = (p.norms[k] - p.norms[k - 1]) / (radii[k] - radii[k - 1]);
        p.sup_estimate = std::max(p.sup_estimate, p.norms[k] + slope * (1.0 - radii[k]));
    }
    return p;
}

std::pair<MultiToeplitzSymbol, MultiToeplitzSymbol> hermitian_part_split(const TruncatedOperator& t,
                                                                         const WeightTable& table, double tol) {
    const ToeplitzReport rep = is_multi_toeplitz(t, table, tol);
    if (!rep.is_toeplitz) {
        std::ostringstream os;
        os << "operator is not weighted right multi-Toeplitz (structure residual " << rep.worst_structure_residual
           << ", incomparable entry " << rep.worst_incomparable_entry << ")";
        throw StructureError(os.str());
    }
    const MultiToeplitzSymbol full =
        pruned(fourier_coefficients(t, table, t.basis.max_length()), tol * std::max(rep.scale, 1.0));
    MultiToeplitzSymbol analytic, antianalytic;
    analytic.aux_dim = antianalytic.aux_dim = t.aux_dim;
    analytic.A = full.A;
    antianalytic.B = full.B;
    return {analytic, antianalytic};
}

std::vector<double> diagonal_decay_profile(const TruncatedOperator& t, const Word& sigma) {
    const int N = t.basis.max_length();
    std::vector<double> out;
    if (static_cast<int>(sigma.length()) > N) return out;
    out.assign(static_cast<std::size_t>(N) - sigma.length() + 1, 0.0);
    for (std::size_t k = 0; k < t.basis.words().size(); ++k) {
        const Word& gamma = t.basis.word(k);
        if (gamma.length() + sigma.length() > static_cast<std::size_t>(N)) break;
        const double e = t.block(*t.basis.index(concat(sigma, gamma)), k).norm();
        out[gamma.length()] = std::max(out[gamma.length()], e);
    }
    return out;
}

Matrix evaluate_symbol(const MultiToeplitzSymbol& sym, const OperatorTuple& x, double r) {
    sym.validate();
    const auto len = static_cast<int>(sym.support_length());
    const std::vector<Matrix> prods = word_products(x, len);
    const Eigen::Index k = x.dim();
    Matrix out = Matrix::Zero(sym.aux_dim * k, sym.aux_dim * k);
    auto product = [&](const Word& alpha) -> const Matrix& {
        if (!alpha.within_alphabet(x.n())) throw DimensionMismatch("symbol word " + alpha.to_string() + " needs more operators");
        return prods[word_index(alpha, x.n())];
    };
    for (const auto& [alpha, blk] : sym.A)
        out += std::pow(r, static_cast<double>(alpha.length())) * kron(blk, product(alpha));
    for (const auto& [alpha, blk] : sym.B)
        out += std::pow(r, static_cast<double>(alpha.length())) * kron(blk, product(alpha).adjoint());
    return out;
}

}  // namespace ncd
