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

#include <map>
#include <random>
#include <sstream>

#include "ncd/errors.hpp"
#include "ncd/generators.hpp"
#include "ncd/weights.hpp"

using namespace ncd;

namespace {

DomainSpec spec_of(int n, int m, std::map<Word, Rational> coeffs) {
    DomainSpec s;
    s.n = n;
    s.m = m;
    s.coefficients = std::move(coeffs);
    s.validate();
    return s;
}

// Coefficients of B with (1 - q)^m B = 1: expand (1 - q)^m as a noncommutative polynomial
// and solve the triangular system word by word.
std::map<Word, Rational> inverse_power_oracle(const DomainSpec& spec, int N) {
    std::map<Word, Rational> one_minus_q{{Word{}, Rational(1)}};
    for (const auto& [w, a] : spec.coefficients) one_minus_q[w] -= a;
    std::map<Word, Rational> power{{Word{}, Rational(1)}};
    for (int j = 0; j < spec.m; ++j) {
        std::map<Word, Rational> next;
        for (const auto& [u, a] : power)
            for (const auto& [v, b] : one_minus_q)
                if (static_cast<int>(u.length() + v.length()) <= N) next[concat(u, v)] += a * b;
        power = std::move(next);
    }
    std::map<Word, Rational> b;
    for (const Word& alpha : enumerate_words(spec.n, N)) {
        Rational acc = alpha.empty() ? Rational(1) : Rational(0);
        for (std::size_t cut = 1; cut <= alpha.length(); ++cut) {
            auto it = power.find(alpha.slice(0, cut));
            if (it != power.end()) acc -= it->second * b[alpha.slice(cut, alpha.length() - cut)];
        }
        b[alpha] = acc;
    }
    return b;
}

}  // namespace

TEST_CASE("domain validation") {
    DomainSpec s;
    s.n = 2;
    s.m = 1;
    s.coefficients[Word{1}] = 1;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.coefficients[Word{2}] = Rational(1, 2);
    CHECK_NOTHROW(s.validate());
    s.coefficients[Word{1, 2}] = -1;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.coefficients[Word{1, 2}] = 0;
    s.coefficients[Word{3}] = 1;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.coefficients.erase(Word{3});
    s.coefficients[Word{}] = 1;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.coefficients.erase(Word{});
    s.m = 0;
    CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("reversed polynomial and degree") {
    const DomainSpec s = spec_of(2, 1, {{Word{1}, 1}, {Word{2}, 2}, {Word{1, 2}, 3}});
    CHECK(s.degree() == 2);
    const DomainSpec r = s.reversed();
    CHECK(r.coefficient(Word{2, 1}) == 3);
    CHECK(r.coefficient(Word{1, 2}) == 0);
    CHECK(r.coefficient(Word{2}) == 2);
}

TEST_CASE("weights: documented values") {
    const auto hb1 = weights_by_factorization(DomainSpec::hyperball(2, 1), 4);
    for (const auto& v : hb1.values()) CHECK(v == 1);

    const DomainSpec mixed1 = spec_of(2, 1, {{Word{1}, 1}, {Word{2}, 1}, {Word{1, 2}, 1}});
    CHECK(weights_by_factorization(mixed1, 3)(Word{1, 2}) == 2);
    CHECK(weights_by_factorization(mixed1, 3)(Word{2, 1}) == 1);

    // (g1)(g2) contributes a_1 a_2 C(3, 1) = 3 and (g1g2) contributes a_{12} C(2, 1) = 2.
    const DomainSpec mixed2 = spec_of(2, 2, {{Word{1}, 1}, {Word{2}, 1}, {Word{1, 2}, 1}});
    CHECK(weights_by_factorization(mixed2, 3)(Word{1, 2}) == 5);
    CHECK(weights_by_convolution(mixed2, 3)(Word{1, 2}) == 5);

    const DomainSpec one = spec_of(1, 1, {{Word{1}, 1}});
    const auto t1 = weights_by_convolution(one, 6);
    for (const auto& v : t1.values()) CHECK(v == 1);

    const auto hb2 = weights_by_convolution(DomainSpec::hyperball(2, 2), 4);
    for (const Word& w : enumerate_words(2, 4)) CHECK(hb2(w) == static_cast<long>(w.length()) + 1);
    CHECK(hyperball_weights(3, 2, 2)(Word{3}) == 2);
    CHECK(hyperball_weights(3, 3, 2)(Word{1, 3}) == 6);
}

TEST_CASE("weights: linear terms give b_{g_i} = m a_{g_i}") {
    const DomainSpec s = spec_of(3, 3, {{Word{1}, Rational(1, 2)}, {Word{2}, 2}, {Word{3}, Rational(3, 4)}, {Word{1, 3}, 1}});
    const auto t = weights_by_factorization(s, 2);
    for (int i = 1; i <= 3; ++i) CHECK(t(Word::generator(i)) == 3 * s.coefficient(Word::generator(i)));
    CHECK(t(Word{}) == 1);
}

TEST_CASE("weights: both constructions agree with the inverse-power oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        const int m = 1 + (trial / 3) % 3;
        const DomainSpec s = random_spec(n, m, 3, rng);
        const int N = n == 3 ? 3 : 4;
        const auto oracle = inverse_power_oracle(s, N);
        const auto f = weights_by_factorization(s, N);
        const auto c = weights_by_convolution(s, N);
        for (const auto& [w, b] : oracle) {
            CHECK(f(w) == b);
            CHECK(c(w) == b);
        }
    }
}

TEST_CASE("truncation is enforced") {
    const auto t = hyperball_weights(2, 1, 2);
    CHECK_THROWS_AS(t(Word{1, 1, 1}), TruncationExceeded);
    CHECK_THROWS_AS(weights_to_csv(t, 3), TruncationExceeded);
}

TEST_CASE("omega estimates") {
    const auto hb1 = hyperball_weights(2, 1, 5);
    CHECK(omega_beta(hb1, Word{1, 2}).estimate == 1);
    const auto hb2 = hyperball_weights(1, 2, 6);
    const auto om = omega_beta(hb2, Word{1});
    CHECK(om.estimate == Rational(6, 7));
    CHECK(om.argmax.length() == 5);
    CHECK(om.exhausted_length == 5);
    CHECK(omega_beta(hb2, Word{}).estimate == 1);
}

TEST_CASE("ratio bound") {
    const auto hb1 = ratio_bound_check(hyperball_weights(2, 1, 4));
    CHECK(hb1.violations == 0);
    CHECK(hb1.worst_slack == 0);
    const auto hb2 = hyperball_weights(2, 2, 4);
    CHECK(hb2(Word{1}) * hb2(Word{2}) <= binomial(2, 1) * hb2(Word{1, 2}));
    Rng rng(5);
    for (int t = 0; t < 6; ++t) CHECK(ratio_bound_check(weights_by_convolution(random_spec(2, 1 + t % 3, 2, rng), 4)).violations == 0);
}

TEST_CASE("compactness ratios") {
    const auto r2 = compactness_ratio_test(hyperball_weights(2, 2, 6));
    for (const auto& pl : r2.letters) {
        CHECK(pl.max_ratio == 2);
        CHECK(pl.argmax.empty());
        CHECK(pl.last_level_nonincreasing);
        for (std::size_t k = 0; k < pl.level_max.size(); ++k)
            CHECK(pl.level_max[k] == doctest::Approx((k + 2.0) / (k + 1.0)));
    }
    for (const auto& pl : compactness_ratio_test(hyperball_weights(2, 1, 4)).letters) CHECK(pl.max_ratio == 1);
    for (const auto& pl : compactness_ratio_test(hyperball_weights(2, 3, 6)).letters) CHECK(pl.max_ratio == 3);
}

TEST_CASE("csv export") {
    const std::string csv = weights_to_csv(hyperball_weights(2, 2, 4), 4);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "word,length,numerator,denominator,float_value");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == 31);
    CHECK(last == "\"[2,2,2,2]\",4,5,1,5");
    CHECK(csv.find("\"[]\",0,1,1,1\n") != std::string::npos);
}

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(2, 3) == 0);
}
