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

#ifndef NCD_REPORT_HPP
#define NCD_REPORT_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "ncd/io.hpp"

namespace ncd {

enum class Status { Pass, Fail, Approx };

std::string to_string(Status s);

struct CheckRecord {
    std::string check_id;
    std::string anchor;  // the statement being certified
    Status status = Status::Fail;
    double residual = 0;
    double tolerance = 0;
    double elapsed = 0;  // seconds
    std::string detail;
};

/// What a check body returns: the residual to compare against the tolerance, and
/// whether the value is a limit surrogate (reported as approx).
struct Outcome {
    Outcome(double r = 0, std::string d = {}, bool approx = false)
        : residual(r), detail(std::move(d)), surrogate(approx) {}
    double residual;
    std::string detail;
    bool surrogate;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string title = "ncdomain") : title_(std::move(title)) {}

    /// Runs body, times it, and records pass when residual <= tolerance. An exception
    /// or a non-finite residual records a failure with the message as detail.
    const CheckRecord& run(const std::string& check_id, const std::string& anchor, double tolerance,
                           const std::function<Outcome()>& body);
    void add(CheckRecord record);

    const std::vector<CheckRecord>& records() const noexcept { return records_; }
    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }

    Json& config() { return config_; }
    void set_seed(unsigned long seed) { config_["seed"] = seed; }

    Json to_json() const;
    /// One line per check: "PASS  id  residual=... tol=...".
    std::string to_text() const;
    void merge(const VerificationReport& other);

private:
    std::string title_;
    Json config_ = Json::object();
    std::vector<CheckRecord> records_;
};

}  // namespace ncd

#endif  // NCD_REPORT_HPP
