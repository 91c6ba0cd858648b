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

#include "ncd/weights.hpp"

#include <cmath>
#include <sstream>

#include "ncd/errors.hpp"

namespace ncd {

Rational binomial(long top, long bottom) {
    if (bottom < 0 || bottom > top) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return Rational(out);
}

// ---------------------------------------------------------------------------
// DomainSpec

void DomainSpec::validate() const {
    if (n < 1) throw ValidationError("domain: alphabet size n must be >= 1");
    if (m < 1) throw ValidationError("domain: order m must be >= 1");
    for (const auto& [w, a] : coefficients) {
        if (!w.within_alphabet(n))
            throw ValidationError("domain: coefficient word " + w.to_string() + " uses a letter outside 1.." +
                                  std::to_string(n));
        if (w.empty() && a != 0) throw ValidationError("domain: q must have no constant term");
        if (a < 0) throw ValidationError("domain: coefficient of " + w.to_string() + " is negative");
    }
    for (int i = 1; i <= n; ++i)
        if (coefficient(Word::generator(i)) <= 0)
            throw ValidationError("domain: linear coefficient a_g" + std::to_string(i) + " must be positive");
}

std::size_t DomainSpec::degree() const {
    std::size_t d = 0;
    for (const auto& [w, a] : coefficients)
        if (a != 0) d = std::max(d, w.length());
    return d;
}

Rational DomainSpec::coefficient(const Word& w) const {
    auto it = coefficients.find(w);
    return it == coefficients.end() ? Rational(0) : it->second;
}

DomainSpec DomainSpec::reversed() const {
    DomainSpec out{n, m, {}};
    for (const auto& [w, a] : coefficients) out.coefficients[reverse(w)] = a;
    return out;
}

std::string DomainSpec::describe() const {
    std::ostringstream os;
    os << "q = ";
    bool first = true;
    for (const auto& [w, a] : coefficients) {
        if (a == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (a != 1) os << a.get_str() << "*";
        for (Letter l : w.letters()) os << "Z" << static_cast<int>(l);
    }
    os << ", n = " << n << ", m = " << m;
    return os.str();
}

DomainSpec DomainSpec::hyperball(int n, int m) {
    DomainSpec s{n, m, {}};
    for (int i = 1; i <= n; ++i) s.coefficients[Word::generator(i)] = 1;
    return s;
}

// ---------------------------------------------------------------------------
// WeightTable

WeightTable::WeightTable(DomainSpec spec, int N, std::vector<Rational> values)
    : spec_(std::move(spec)), N_(N), values_(std::move(values)) {
    if (values_.size() != word_count(spec_.n, N_))
        throw DimensionMismatch("weight table: value count does not match word count");
}

const Rational& WeightTable::operator()(const Word& w) const {
    if (static_cast<int>(w.length()) > N_)
        throw TruncationExceeded("weight table: word " + w.to_string() + " longer than N = " + std::to_string(N_));
    return values_[word_index(w, spec_.n)];
}

double WeightTable::sqrt_ratio(const Word& num, const Word& den) const {
    const Rational r = (*this)(num) / (*this)(den);
    return std::sqrt(r.get_d());
}

WeightTable weights_by_factorization(const DomainSpec& spec, int N) {
    spec.validate();
    if (N < 0) throw std::invalid_argument("weights: N must be >= 0");
    const auto words = enumerate_words(spec.n, N);
    const std::size_t deg = spec.degree();
    std::vector<Rational> multiplier(static_cast<std::size_t>(N) + 1);
    for (int j = 1; j <= N; ++j) multiplier[j] = binomial(j + spec.m - 1, spec.m - 1);

    std::vector<Rational> values(words.size());
    values[0] = 1;
    for (std::size_t idx = 1; idx < words.size(); ++idx) {
        Rational total = 0;
        for_each_composition(words[idx], [&](const std::vector<Word>& parts) {
            Rational prod = 1;
            for (const Word& p : parts) {
                if (p.length() > deg) return;
                auto it = spec.coefficients.find(p);
                if (it == spec.coefficients.end() || it->second == 0) return;
                prod *= it->second;
            }
            total += prod * multiplier[parts.size()];
        });
        values[idx] = total;
    }
    return WeightTable(spec, N, std::move(values));
}

namespace {

using Series = std::vector<Rational>;  // indexed by canonical word index, truncated at N

Series convolve(const Series& f, const Series& g, const std::vector<Word>& words, int n) {
    Series out(words.size());
    for (std::size_t idx = 0; idx < words.size(); ++idx) {
        const Word& w = words[idx];
        Rational acc = 0;
        for (std::size_t cut = 0; cut <= w.length(); ++cut) {
            const Rational& left = f[word_index(w.slice(0, cut), n)];
            if (left == 0) continue;
            acc += left * g[word_index(w.slice(cut, w.length() - cut), n)];
        }
        out[idx] = acc;
    }
    return out;
}

}  // namespace

WeightTable weights_by_convolution(const DomainSpec& spec, int N) {
    spec.validate();
    if (N < 0) throw std::invalid_argument("weights: N must be >= 0");
    const auto words = enumerate_words(spec.n, N);

    // B = 1 + q B, solved in graded order: the coefficient at w only needs shorter suffixes.
    Series inverse(words.size());
    inverse[0] = 1;
    for (std::size_t idx = 1; idx < words.size(); ++idx) {
        const Word& w = words[idx];
        Rational acc = 0;
        for (std::size_t cut = 1; cut <= w.length(); ++cut) {
            const Rational a = spec.coefficient(w.slice(0, cut));
            if (a == 0) continue;
            acc += a * inverse[word_index(w.slice(cut, w.length() - cut), spec.n)];
        }
        inverse[idx] = acc;
    }

    Series power = inverse;
    for (int k = 1; k < spec.m; ++k) power = convolve(power, inverse, words, spec.n);
    return WeightTable(spec, N, std::move(power));
}

WeightTable hyperball_weights(int n, int m, int N) {
    if (n < 1 || m < 1) throw ValidationError("hyperball: need n >= 1 and m >= 1");
    const std::size_t count = word_count(n, N);
    std::vector<Rational> values(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto len = static_cast<long>(word_at(idx, n).length());
        values[idx] = binomial(len + m - 1, m - 1);
    }
    return WeightTable(DomainSpec::hyperball(n, m), N, std::move(values));
}

OmegaEstimate omega_beta(const WeightTable& table, const Word& beta) {
    const int N = table.max_length();
    if (static_cast<int>(beta.length()) > N)
        throw TruncationExceeded("omega_beta: |beta| exceeds the table length");
    const int depth = N - static_cast<int>(beta.length());
    OmegaEstimate out;
    out.exhausted_length = depth;
    out.estimate = -1;
    const std::size_t count = word_count(table.n(), depth);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const Word gamma = word_at(idx, table.n());
        const Rational ratio = table.at_index(idx) / table(concat(beta, gamma));
        if (ratio > out.estimate) {
            out.estimate = ratio;
            out.argmax = gamma;
        }
    }
    return out;
}

RatioBoundReport ratio_bound_check(const WeightTable& table) {
    RatioBoundReport rep;
    bool first = true;
    const int n = table.n();
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Word w = word_at(idx, n);
        for (std::size_t cut = 0; cut <= w.length(); ++cut) {
            const Word alpha = w.slice(0, cut);
            const Word beta = w.slice(cut, w.length() - cut);
            const Rational rhs = binomial(static_cast<long>(beta.length()) + table.m() - 1, table.m() - 1) * table.at_index(idx);
            const Rational slack = rhs - table(alpha) * table(beta);
            ++rep.pairs_checked;
            if (slack < 0) ++rep.violations;
            if (first || slack < rep.worst_slack) {
                rep.worst_slack = slack;
                rep.worst_alpha = alpha;
                rep.worst_beta = beta;
                first = false;
            }
        }
    }
    return rep;
}

CompactnessRatioReport compactness_ratio_test(const WeightTable& table) {
    CompactnessRatioReport rep;
    const int n = table.n();
    const int depth = table.max_length() - 1;
    for (int i = 1; i <= n; ++i) {
        CompactnessRatioReport::PerLetter pl;
        pl.letter = i;
        pl.max_ratio = -1;
        if (depth >= 0) pl.level_max.assign(static_cast<std::size_t>(depth) + 1, 0.0);
        const std::size_t count = depth >= 0 ? word_count(n, depth) : 0;
        const Word gi = Word::generator(i);
        for (std::size_t idx = 0; idx < count; ++idx) {
            const Word alpha = word_at(idx, n);
            const Rational ratio = table(concat(gi, alpha)) / table.at_index(idx);
            if (ratio > pl.max_ratio) {
                pl.max_ratio = ratio;
                pl.argmax = alpha;
            }
            double& lm = pl.level_max[alpha.length()];
            lm = std::max(lm, ratio.get_d());
        }
        if (pl.level_max.size() >= 2)
            pl.last_level_nonincreasing = pl.level_max[pl.level_max.size() - 1] <= pl.level_max[pl.level_max.size() - 2];
        rep.letters.push_back(std::move(pl));
    }
    return rep;
}

std::string weights_to_csv(const WeightTable& table, int max_len) {
    if (max_len > table.max_length()) throw TruncationExceeded("weights_to_csv: max_len exceeds table length");
    std::ostringstream os;
    os << "word,length,numerator,denominator,float_value\n";
    os.precision(17);
    const std::size_t count = word_count(table.n(), max_len);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const Word w = word_at(idx, table.n());
        const Rational& b = table.at_index(idx);
        os << "\"[";
        for (std::size_t k = 0; k < w.length(); ++k) os << (k ? "," : "") << static_cast<int>(w[k]);
        os << "]\"," << w.length() << ',' << b.get_num().get_str() << ',' << b.get_den().get_str() << ','
           << b.get_d() << '\n';
    }
    return os.str();
}

}  // namespace ncd
