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

#ifndef NCD_WEIGHTS_HPP
#define NCD_WEIGHTS_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ncd/words.hpp"

namespace ncd {

using Rational = mpq_class;

/// Binomial coefficient C(top, bottom) as an exact rational.
Rational binomial(long top, long bottom);

/// The data (n, m, q) of a domain D_q^m, with q = sum a_alpha Z_alpha a positive
/// regular polynomial.
struct DomainSpec {
    int n = 1;
    int m = 1;
    std::map<Word, Rational> coefficients;  // finite support, words of length >= 1

    /// Throws ValidationError unless: n >= 1, m >= 1, letters in 1..n,
    /// a_{g0} = 0, a_{g_i} > 0 for every i, all coefficients >= 0.
    void validate() const;

    std::size_t degree() const;
    Rational coefficient(const Word& w) const;

    /// q~ : coefficient of alpha is a_{reverse(alpha)}.
    DomainSpec reversed() const;

    std::string describe() const;  // "q = Z1 + Z2 + Z1Z2, m = 2"

    static DomainSpec hyperball(int n, int m);
};

/// Exact weights b_alpha^(m) for every word of length <= N, indexed canonically.
class WeightTable {
public:
    WeightTable(DomainSpec spec, int N, std::vector<Rational> values);

    const DomainSpec& spec() const noexcept { return spec_; }
    int n() const noexcept { return spec_.n; }
    int m() const noexcept { return spec_.m; }
    int max_length() const noexcept { return N_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// Throws TruncationExceeded when |w| > N.
    const Rational& operator()(const Word& w) const;
    const Rational& at_index(std::size_t i) const { return values_[i]; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    double as_double(const Word& w) const { return (*this)(w).get_d(); }
    /// sqrt(b_num / b_den), the ratio taken exactly before rounding.
    double sqrt_ratio(const Word& num, const Word& den) const;

    friend bool operator==(const WeightTable& a, const WeightTable& b) {
        return a.N_ == b.N_ && a.values_ == b.values_;
    }

private:
    DomainSpec spec_;
    int N_;
    std::vector<Rational> values_;
};

/// Sum over compositions alpha = gamma_1...gamma_j of a_{gamma_1}...a_{gamma_j} C(j+m-1, m-1).
WeightTable weights_by_factorization(const DomainSpec& spec, int N);

/// Coefficients of (1 - q)^{-m}: solves B = 1 + qB degree by degree, then takes the
/// m-fold noncommutative convolution power.
WeightTable weights_by_convolution(const DomainSpec& spec, int N);

/// Closed form C(|alpha|+m-1, m-1) for q = Z_1 + ... + Z_n.
WeightTable hyperball_weights(int n, int m, int N);

struct OmegaEstimate {
    Rational estimate;          // max of b_gamma / b_{beta gamma} over the searched gammas
    int exhausted_length = 0;   // deepest |gamma| searched
    Word argmax;
};

/// Depth-limited lower approximation of sup_gamma b_gamma / b_{beta gamma}.
OmegaEstimate omega_beta(const WeightTable& table, const Word& beta);

struct RatioBoundReport {
    std::size_t pairs_checked = 0;
    std::size_t violations = 0;
    Rational worst_slack;  // min over pairs of C(|beta|+m-1,m-1) b_{alpha beta} - b_alpha b_beta
    Word worst_alpha, worst_beta;
};

/// Checks b_alpha b_beta <= C(|beta|+m-1, m-1) b_{alpha beta} for all |alpha beta| <= N.
RatioBoundReport ratio_bound_check(const WeightTable& table);

struct CompactnessRatioReport {
    struct PerLetter {
        int letter = 0;
        Rational max_ratio;     // max over |alpha| <= N-1 of b_{g_i alpha} / b_alpha
        Word argmax;
        std::vector<double> level_max;  // per length k of alpha, max ratio at that level
        bool last_level_nonincreasing = true;  // level N-1 vs N-2
    };
    std::vector<PerLetter> letters;
};

CompactnessRatioReport compactness_ratio_test(const WeightTable& table);

/// CSV with columns word,length,numerator,denominator,float_value.
std::string weights_to_csv(const WeightTable& table, int max_len);

}  // namespace ncd

#endif  // NCD_WEIGHTS_HPP
