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

#include "ncd/generators.hpp"

#include "ncd/cauchy.hpp"

namespace ncd {

namespace {

Complex gaussian(Rng& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
    return m;
}

// Largest s in [0, hi] with pred(s), assuming pred holds on an initial segment.
template <class Pred>
double bisect(Pred pred) {
    double lo = 0, hi = 1;
    while (pred(hi) && hi < 1e6) {
        lo = hi;
        hi *= 2;
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

DomainSpec random_spec(int n, int m, int max_degree, Rng& rng) {
    DomainSpec spec;
    spec.n = n;
    spec.m = m;
    std::uniform_int_distribution<int> num(1, 4), den(1, 4);
    std::bernoulli_distribution keep(0.4);
    for (const Word& w : enumerate_words(n, max_degree)) {
        if (w.empty()) continue;
        if (w.length() == 1 || keep(rng)) {
            Rational a(num(rng), den(rng));
            a.canonicalize();
            spec.coefficients[w] = a;
        }
    }
    spec.validate();
    return spec;
}

MultiToeplitzSymbol random_symbol(int n, int max_len, int aux_dim, bool analytic, Rng& rng, double density) {
    MultiToeplitzSymbol s;
    s.aux_dim = aux_dim;
    std::bernoulli_distribution keep(density);
    for (const Word& w : enumerate_words(n, max_len)) {
        if (w.empty() || keep(rng)) s.A[w] = gaussian_matrix(aux_dim, aux_dim, rng);
        if (!analytic && !w.empty() && keep(rng)) s.B[w] = gaussian_matrix(aux_dim, aux_dim, rng);
    }
    return s;
}

OperatorTuple random_nilpotent_tuple(int n, int k, Rng& rng) {
    std::vector<Matrix> ops;
    for (int i = 0; i < n; ++i) {
        Matrix m = Matrix::Zero(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = r + 1; c < k; ++c) m(r, c) = gaussian(rng);
        ops.push_back(std::move(m));
    }
    return OperatorTuple(std::move(ops));
}

OperatorTuple random_tuple(int n, int k, Rng& rng) {
    std::vector<Matrix> ops;
    for (int i = 0; i < n; ++i) ops.push_back(gaussian_matrix(k, k, rng));
    return OperatorTuple(std::move(ops));
}

OperatorTuple scale_into_domain(const DomainSpec& spec, const OperatorTuple& x, double fraction) {
    const double s = bisect([&](double t) { return domain_membership(spec, x.scaled(t), 0.0, 1).in_domain; });
    return x.scaled(fraction * s);
}

OperatorTuple scale_to_spectral_radius(const DomainSpec& spec, const OperatorTuple& x, double target) {
    const double s = bisect([&](double t) { return joint_spectral_radius(spec, x.scaled(t), 1).r_f_exact <= target; });
    return x.scaled(s);
}

HereditaryPolynomial random_hereditary(int n, int max_degree, int terms, Rng& rng) {
    HereditaryPolynomial p;
    p.n = n;
    const auto words = enumerate_words(n, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int t = 0; t < terms; ++t) p.terms.push_back({words[pick(rng)], words[pick(rng)], gaussian(rng)});
    return p;
}

}  // namespace ncd
