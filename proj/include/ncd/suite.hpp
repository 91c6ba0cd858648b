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

#ifndef NCD_SUITE_HPP
#define NCD_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncd/linalg.hpp"
#include "ncd/report.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace ncd {

struct SuiteOptions {
    int N = 5;
    int aux_dim = 2;
    unsigned long seed = 20260415;
    double tol = 1e-10;
    int samples = 3;
    std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
};

struct CorpusEntry {
    std::string name;
    DomainSpec spec;
};

/// Hyperballs with n in {1, 2}, m in {1, 2, 3}; q = Z1 + Z2 + Z1Z2 with m in {1, 2};
/// the one-variable domain q = Z + Z^2 with m in {1, 2}.
std::vector<CorpusEntry> builtin_corpus();

bool is_hyperball(const DomainSpec& spec);

void weights_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o);
void model_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o);
/// Random symbols, plus the given operator or symbol when supplied.
void toeplitz_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                     const std::optional<MultiToeplitzSymbol>& symbol = std::nullopt);
void berezin_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                    const std::optional<OperatorTuple>& tuple = std::nullopt);
void pluriharmonic_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec,
                          const SuiteOptions& o, const std::optional<MultiToeplitzSymbol>& symbol = std::nullopt);
void cauchy_checks(VerificationReport& rep, const std::string& name, const DomainSpec& spec, const SuiteOptions& o,
                   const std::optional<OperatorTuple>& tuple = std::nullopt);

VerificationReport verify_all(const SuiteOptions& o);

}  // namespace ncd

#endif  // NCD_SUITE_HPP
