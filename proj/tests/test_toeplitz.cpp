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

#include <doctest.h>

#include <cmath>

#include "ncd/errors.hpp"
#include "ncd/generators.hpp"
#include "ncd/toeplitz.hpp"

using namespace ncd;

namespace {

DomainSpec mixed_spec(int m) {
    DomainSpec s;
    s.n = 2;
    s.m = m;
    s.coefficients[Word{1}] = 1;
    s.coefficients[Word{2}] = 1;
    s.coefficients[Word{1, 2}] = 1;
    return s;
}

// Direct assembly from the entry law, block by block.
Matrix entry_law_operator(const MultiToeplitzSymbol& sym, const WeightTable& t, double r, int N) {
    const FockBasis b(t.n(), N);
    const int d = sym.aux_dim;
    Matrix out = Matrix::Zero(b.dim() * d, b.dim() * d);
    for (const Word& g : b.words()) {
        const auto col = static_cast<Eigen::Index>(*b.index(g));
        for (const Word& a : enumerate_words(t.n(), N - static_cast<int>(g.length()))) {
            const Word ag = concat(a, g);
            const auto row = static_cast<Eigen::Index>(*b.index(ag));
            const double c = std::pow(r, static_cast<double>(a.length())) * std::sqrt(t(g).get_d() / t(ag).get_d());
            if (auto it = sym.A.find(a); it != sym.A.end()) out.block(row * d, col * d, d, d) += c * it->second;
            if (auto it = sym.B.find(a); it != sym.B.end()) out.block(col * d, row * d, d, d) += c * it->second;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("toeplitz detection: creation operators and identity") {
    const int N = 4;
    const WeightTable t = weights_by_convolution(mixed_spec(2), N);
    for (int i = 1; i <= 2; ++i) {
        const auto rep = is_multi_toeplitz(weighted_left_creation(t, i, N), t);
        CHECK(rep.is_toeplitz);
        CHECK(rep.worst_structure_residual <= 1e-14);
        CHECK(is_multi_toeplitz(weighted_left_creation(t, i, N).adjoint(), t).is_toeplitz);
    }
    CHECK(is_multi_toeplitz(TruncatedOperator::identity(FockBasis(2, N), 3), t).is_toeplitz);
    // Right creation operators are not right multi-Toeplitz when n > 1.
    CHECK_FALSE(is_multi_toeplitz(weighted_right_creation(t, 1, N), t).is_toeplitz);
    CHECK_THROWS_AS(is_multi_toeplitz(TruncatedOperator::identity(FockBasis(3, N)), t), DimensionMismatch);
}

TEST_CASE("toeplitz detection: perturbations of constructed operators") {
    Rng rng(5);
    const int N = 4;
    const WeightTable t = weights_by_convolution(mixed_spec(1), N);
    for (int trial = 0; trial < 5; ++trial) {
        const auto sym = random_symbol(2, 3, 2, false, rng);
        TruncatedOperator op = symbol_to_operator(sym, t, 0.8, N);
        const auto clean = is_multi_toeplitz(op, t);
        CHECK(clean.is_toeplitz);
        CHECK(clean.worst_structure_residual <= 1e-12 * std::max(1.0, clean.scale));
        const auto w = *op.basis.index(Word{1, 2});
        const auto v = *op.basis.index(Word{2, 1});
        Matrix blk = op.block(w, v);
        blk(0, 1) += 0.1;
        op.set_block(w, v, blk);
        const auto bad = is_multi_toeplitz(op, t);
        CHECK_FALSE(bad.is_toeplitz);
        CHECK(bad.worst_incomparable_entry >= 0.1 - 1e-15);
        CHECK_FALSE(bad.incomparable_witness.empty());
    }
}

TEST_CASE("toeplitz detection: a comparable-pair perturbation breaks the shift relation") {
    const int N = 4;
    const WeightTable t = hyperball_weights(2, 2, N);
    TruncatedOperator op = weighted_left_creation(t, 1, N);
    const auto i = *op.basis.index(Word{1, 2});
    const auto j = *op.basis.index(Word{2});
    Matrix blk = op.block(i, j);
    blk(0, 0) += 0.1;
    op.set_block(i, j, blk);
    const auto rep = is_multi_toeplitz(op, t);
    CHECK_FALSE(rep.is_toeplitz);
    CHECK(rep.worst_structure_residual > 0.05);
    CHECK_FALSE(rep.structure_witness.empty());
}

TEST_CASE("fourier coefficients of documented operators") {
    const int N = 3;
    const WeightTable t = weights_by_convolution(mixed_spec(2), N);
    const auto a = fourier_coefficients(weighted_left_creation(t, 1, N), t, N);
    const auto expect_a = MultiToeplitzSymbol::monomial(Word{1}, 1.0);
    CHECK(symbol_distance(pruned(a, 1e-14), expect_a) < 1e-14);
    const auto b = fourier_coefficients(weighted_left_creation(t, 2, N).adjoint(), t, N);
    CHECK(b.B.size() + b.A.size() >= 1);
    CHECK(symbol_distance(pruned(b, 1e-14), symbol_adjoint(MultiToeplitzSymbol::monomial(Word{2}, 1.0))) < 1e-14);
    CHECK(pruned(b, 1e-14).B.count(Word{2}) == 1);
    const auto c = fourier_coefficients(Complex(2.0, -1.0) * TruncatedOperator::identity(FockBasis(2, N)), t, N);
    const auto pc = pruned(c, 1e-14);
    CHECK(pc.A.size() == 1);
    CHECK(pc.B.empty());
    CHECK(pc.A.at(Word{})(0, 0) == Complex(2.0, -1.0));
}

TEST_CASE("symbol_to_operator: documented values") {
    const int N = 3;
    const WeightTable t = weights_by_convolution(mixed_spec(1), N);
    const FockBasis basis(2, N);
    const auto id = symbol_to_operator(MultiToeplitzSymbol::constant(1.0), t, 0.3, N);
    CHECK(max_abs(id.matrix - Matrix::Identity(basis.dim(), basis.dim())) == 0);
    const auto w1 = symbol_to_operator(MultiToeplitzSymbol::monomial(Word{1}, 1.0), t, 1.0, N);
    CHECK(max_abs(w1.matrix - weighted_left_creation(t, 1, N).matrix) < 1e-15);
    MultiToeplitzSymbol deep = MultiToeplitzSymbol::monomial(Word{1, 1, 1, 1}, 1.0);
    CHECK_THROWS_AS(symbol_to_operator(deep, t, 1.0, N), TruncationExceeded);
}

TEST_CASE("entry law and roundtrip over random symbols") {
    Rng rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = 1 + trial % 3;
        const DomainSpec s = trial % 2 ? mixed_spec(m) : random_spec(2, m, 2, rng);
        const int N = 4;
        const WeightTable t = weights_by_convolution(s, N);
        const auto sym = random_symbol(2, N, 1 + trial % 2, trial % 3 == 0, rng);
        for (double r : {1.0, 0.7}) {
            const auto op = symbol_to_operator(sym, t, r, N);
            CHECK(max_abs(op.matrix - entry_law_operator(sym, t, r, N)) < 1e-13);
        }
        const auto back = fourier_coefficients(symbol_to_operator(sym, t, 1.0, N), t, N);
        for (const auto& [w, blk] : sym.A) CHECK(max_abs(symbol_block(back.A, w, sym.aux_dim) - blk) <= 1e-12);
        for (const auto& [w, blk] : sym.B) CHECK(max_abs(symbol_block(back.B, w, sym.aux_dim) - blk) <= 1e-12);
        CHECK(symbol_distance(back, sym) <= 1e-11);
    }
}

TEST_CASE("uniqueness: distinct symbols differ in the first row or column") {
    Rng rng(23);
    const int N = 3;
    const WeightTable t = weights_by_convolution(mixed_spec(2), N);
    for (int trial = 0; trial < 8; ++trial) {
        const auto s1 = random_symbol(2, N, 1, false, rng);
        auto s2 = s1;
        const Word w = enumerate_words(2, N)[1 + trial % 10];
        if (trial % 2) {
            s2.B[w] = symbol_block(s2.B, w, 1) + Matrix::Constant(1, 1, 1e-3);
        } else {
            s2.A[w] = symbol_block(s2.A, w, 1) + Matrix::Constant(1, 1, 1e-3);
        }
        const auto o1 = symbol_to_operator(s1, t, 1.0, N);
        const auto o2 = symbol_to_operator(s2, t, 1.0, N);
        double first = 0;
        for (std::size_t k = 0; k < o1.basis.words().size(); ++k) {
            first = std::max(first, max_abs(o1.block(k, 0) - o2.block(k, 0)));
            first = std::max(first, max_abs(o1.block(0, k) - o2.block(0, k)));
        }
        CHECK(first > 1e-4);
    }
}

TEST_CASE("linearity and adjoint preserve the Toeplitz property") {
    Rng rng(29);
    const int N = 4;
    const WeightTable t = hyperball_weights(2, 3, N);
    const auto s1 = random_symbol(2, 3, 2, false, rng);
    const auto s2 = random_symbol(2, 3, 2, true, rng);
    const auto t1 = symbol_to_operator(s1, t, 1.0, N);
    const auto t2 = symbol_to_operator(s2, t, 0.5, N);
    CHECK(is_multi_toeplitz(Complex(0.3, 2.0) * t1 + t2, t, 1e-12).is_toeplitz);
    CHECK(is_multi_toeplitz(t1.adjoint(), t, 1e-12).is_toeplitz);
    const auto sum = symbol_to_operator(s1 + Complex(2.0) * s2, t, 1.0, N);
    CHECK(max_abs(sum.matrix - (t1 + Complex(2.0) * symbol_to_operator(s2, t, 1.0, N)).matrix) < 1e-13);
    const auto adj = symbol_to_operator(symbol_adjoint(s1), t, 1.0, N);
    CHECK(max_abs(adj.matrix - t1.adjoint().matrix) < 1e-13);
}

TEST_CASE("norm profiles") {
    const std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99};
    const WeightTable hb = hyperball_weights(2, 1, 4);
    const auto one = norm_profile(MultiToeplitzSymbol::constant(1.0), hb, radii, 4);
    for (double v : one.norms) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    const auto shift = norm_profile(MultiToeplitzSymbol::monomial(Word{1}, 1.0), hb, radii, 4);
    for (std::size_t j = 0; j < radii.size(); ++j) CHECK(shift.norms[j] == doctest::Approx(radii[j]).epsilon(1e-13));
    CHECK(shift.monotone);
    Rng rng(31);
    const WeightTable t = weights_by_convolution(mixed_spec(2), 4);
    for (int trial = 0; trial < 6; ++trial) {
        const auto p = norm_profile(random_symbol(2, 3, 2, trial % 2 == 0, rng), t, radii, 4);
        CHECK(p.monotone);
        CHECK(p.worst_violation <= 1e-10);
        CHECK(p.sup_estimate >= p.norms.back() - 1e-12);
    }
}

TEST_CASE("norms are nondecreasing in the truncation level") {
    Rng rng(37);
    const auto sym = random_symbol(2, 2, 1, false, rng);
    double prev = 0;
    for (int N = 2; N <= 6; ++N) {
        const WeightTable t = hyperball_weights(2, 2, N);
        const double v = operator_norm(symbol_to_operator(sym, t, 0.9, N).matrix);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("hermitian part split") {
    const int N = 3;
    const WeightTable t = weights_by_convolution(mixed_spec(2), N);
    const auto op = weighted_left_creation(t, 1, N) + weighted_left_creation(t, 2, N).adjoint();
    const auto [an, anti] = hermitian_part_split(op, t);
    CHECK(an.A.size() == 1);
    CHECK(max_abs(an.A.at(Word{1}) - Matrix::Identity(1, 1)) < 1e-14);
    CHECK(anti.B.size() == 1);
    CHECK(max_abs(anti.B.at(Word{2}) - Matrix::Identity(1, 1)) < 1e-14);

    Rng rng(41);
    const auto sym = random_symbol(2, 2, 2, true, rng);
    const auto herm = symbol_to_operator(sym + symbol_adjoint(sym), t, 1.0, N);
    const auto [ha, hb] = hermitian_part_split(herm, t);
    for (const auto& [w, blk] : hb.B) CHECK(max_abs(blk - symbol_block(ha.A, w, 2).adjoint()) < 1e-12);

    const auto [za, zb] = hermitian_part_split(TruncatedOperator::zero(FockBasis(2, N)), t);
    CHECK(za.A.empty());
    CHECK(zb.B.empty());
    CHECK_THROWS_AS(hermitian_part_split(weighted_right_creation(t, 1, N), t), StructureError);
}

TEST_CASE("symbol algebra and validation") {
    MultiToeplitzSymbol s;
    s.aux_dim = 2;
    s.A[Word{1}] = Matrix::Identity(3, 3);
    CHECK_THROWS_AS(s.validate(), ValidationError);
    MultiToeplitzSymbol z;
    z.B[Word{}] = Matrix::Identity(1, 1);
    CHECK_THROWS_AS(z.validate(), ValidationError);
    const auto p = symbol_product(MultiToeplitzSymbol::monomial(Word{1}, 2.0), MultiToeplitzSymbol::monomial(Word{2}, 3.0));
    CHECK(p.A.at(Word{1, 2})(0, 0) == Complex(6.0));
    const WeightTable t = hyperball_weights(2, 2, 2);
    const auto [sa, sb] = MultiToeplitzSymbol::monomial(Word{1, 2}, 3.0).summability(t);
    CHECK(sa == doctest::Approx(9.0 / 3.0));
    CHECK(sb == 0);
    CHECK(MultiToeplitzSymbol::monomial(Word{1, 2}, 1.0).support_length() == 2);
}

TEST_CASE("diagonal decay profile and symbol evaluation") {
    const WeightTable t = hyperball_weights(1, 2, 6);
    const auto w = weighted_left_creation(t, 1, 6);
    const auto prof = diagonal_decay_profile(w, Word{1});
    REQUIRE(prof.size() >= 3);
    for (std::size_t k = 0; k + 1 < prof.size(); ++k)
        CHECK(prof[k] == doctest::Approx(std::sqrt((k + 1.0) / (k + 2.0))).epsilon(1e-13));

    OperatorTuple x{{Matrix::Constant(1, 1, 0.5), Matrix::Constant(1, 1, Complex(0, 0.25))}};
    MultiToeplitzSymbol sym = MultiToeplitzSymbol::constant(1.0) + MultiToeplitzSymbol::monomial(Word{1, 2}, 4.0);
    sym.B[Word{2}] = Matrix::Constant(1, 1, 2.0);
    const Matrix v = evaluate_symbol(sym, x, 0.5);
    // 1 + 4 (0.25)(0.5)(0.25 i) + 2 (0.5)(-0.25 i)
    CHECK(std::abs(v(0, 0) - Complex(1.0, 0.125 - 0.25)) < 1e-15);
}
