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

#ifndef NCD_ERRORS_HPP
#define NCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncd {

// Malformed domain data: negative coefficients, missing linear terms, bad letters.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A request reaches past the truncation length of a table or basis.
class TruncationExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The tuple fails the positivity conditions that define the domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operator does not have the weighted multi-Toeplitz structure required.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No dilation factor t > 1 keeps the scaled tuple inside the gate.
class MarginError : public std::runtime_error {
public:
    MarginError(const std::string& what, double spectral_radius)
        : std::runtime_error(what), spectral_radius_(spectral_radius) {}
    double spectral_radius() const noexcept { return spectral_radius_; }

private:
    double spectral_radius_;
};

}  // namespace ncd

#endif  // NCD_ERRORS_HPP
