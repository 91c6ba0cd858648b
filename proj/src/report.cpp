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

#include "ncd/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncd {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Approx: return "approx";
    }
    return "fail";
}

const CheckRecord& VerificationReport::run(const std::string& check_id, const std::string& anchor, double tolerance,
                                           const std::function<Outcome()>& body) {
    CheckRecord rec;
    rec.check_id = check_id;
    rec.anchor = anchor;
    rec.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome out = body();
        rec.residual = out.residual;
        rec.detail = out.detail;
        if (!std::isfinite(out.residual) || out.residual > tolerance)
            rec.status = Status::Fail;
        else
            rec.status = out.surrogate ? Status::Approx : Status::Pass;
    } catch (const std::exception& e) {
        rec.status = Status::Fail;
        rec.residual = std::nan("");
        rec.detail = std::string("exception: ") + e.what();
    }
    rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    records_.push_back(std::move(rec));
    return records_.back();
}

void VerificationReport::add(CheckRecord record) { records_.push_back(std::move(record)); }

std::size_t VerificationReport::count(Status s) const {
    std::size_t c = 0;
    for (const auto& r : records_)
        if (r.status == s) ++c;
    return c;
}

Json VerificationReport::to_json() const {
    Json j;
    j["title"] = title_;
    j["config"] = config_;
    Json checks = Json::array();
    for (const auto& r : records_) {
        Json c;
        c["check_id"] = r.check_id;
        c["anchor"] = r.anchor;
        c["status"] = to_string(r.status);
        if (std::isfinite(r.residual))
            c["residual"] = r.residual;
        else
            c["residual"] = nullptr;
        c["tolerance"] = r.tolerance;
        c["elapsed"] = r.elapsed;
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    Json summary;
    summary["total"] = records_.size();
    summary["pass"] = count(Status::Pass);
    summary["approx"] = count(Status::Approx);
    summary["fail"] = count(Status::Fail);
    j["summary"] = std::move(summary);
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "residual=%.3e tol=%.1e %.2fs", r.residual, r.tolerance, r.elapsed);
        std::string status = to_string(r.status);
        for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << status << "  " << r.check_id << "  " << buf;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << '\n';
    }
    os << "summary: " << records_.size() << " checks, " << count(Status::Pass) << " pass, " << count(Status::Approx)
       << " approx, " << count(Status::Fail) << " fail\n";
    return os.str();
}

void VerificationReport::merge(const VerificationReport& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

}  // namespace ncd
