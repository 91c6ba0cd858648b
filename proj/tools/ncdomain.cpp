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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ncd/errors.hpp"
#include "ncd/io.hpp"
#include "ncd/report.hpp"
#include "ncd/suite.hpp"
#include "ncd/toeplitz.hpp"
#include "ncd/weights.hpp"

namespace {

using namespace ncd;

struct Options {
    std::string spec_path;
    int max_len = 5;
    int aux_dim = 2;
    double tol = 1e-10;
    std::vector<double> radii;
    unsigned long seed = SuiteOptions{}.seed;
    std::string out;
    std::string format = "text";
    std::string op_path;
    std::string symbol_path;
    std::string tuple_path;
    double radius = 1.0;
    int samples = 3;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SuiteOptions suite_options(const Options& o) {
    if (o.max_len < 1) throw ConfigError("--max-len must be >= 1");
    if (o.aux_dim < 1) throw ConfigError("--aux-dim must be >= 1");
    if (!(o.tol > 0)) throw ConfigError("--tol must be positive");
    if (o.samples < 0) throw ConfigError("--samples must be >= 0");
    SuiteOptions s;
    s.N = o.max_len;
    s.aux_dim = o.aux_dim;
    s.tol = o.tol;
    s.seed = o.seed;
    s.samples = o.samples;
    if (!o.radii.empty()) {
        for (std::size_t j = 0; j < o.radii.size(); ++j)
            if (o.radii[j] < 0 || o.radii[j] > 1 || (j > 0 && o.radii[j] <= o.radii[j - 1]))
                throw ConfigError("--radii must be increasing values in [0, 1]");
        s.radii = o.radii;
    }
    return s;
}

DomainSpec load_spec(const Options& o) {
    if (o.spec_path.empty()) throw ConfigError("--spec is required");
    DomainSpec spec = spec_from_json(load_json(o.spec_path));
    const long need = static_cast<long>(spec.m) * static_cast<long>(spec.degree());
    if (o.max_len < need)
        throw ConfigError("--max-len must be at least m * deg(q) = " + std::to_string(need));
    return spec;
}

int finish(VerificationReport& rep, const Options& o) {
    if (!o.out.empty()) save_text(o.out, rep.to_json().dump(2) + "\n");
    if (o.format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.ok() ? 0 : 1;
}

VerificationReport make_report(const std::string& title, const Options& o, const std::optional<DomainSpec>& spec) {
    VerificationReport rep(title);
    rep.set_seed(o.seed);
    rep.config()["N"] = o.max_len;
    rep.config()["aux_dim"] = o.aux_dim;
    rep.config()["tol"] = o.tol;
    if (spec) rep.config()["spec"] = spec_to_json(*spec);
    return rep;
}

int run_weights(const Options& o) {
    const DomainSpec spec = load_spec(o);
    const SuiteOptions so = suite_options(o);
    VerificationReport rep = make_report("weights", o, spec);
    weights_checks(rep, "spec", spec, so);
    const WeightTable table = weights_by_convolution(spec, o.max_len);
    if (o.format == "csv") {
        const std::string csv = weights_to_csv(table, o.max_len);
        if (o.out.empty())
            std::cout << csv;
        else
            save_text(o.out, csv);
        std::cerr << rep.to_text();
        return rep.ok() ? 0 : 1;
    }
    if (!o.out.empty()) {
        save_text(o.out, weights_to_csv(table, o.max_len));
        std::cout << rep.to_text();
        return rep.ok() ? 0 : 1;
    }
    if (o.format == "json") {
        Json j = rep.to_json();
        Json rows = Json::array();
        for (std::size_t i = 0; i < table.size(); ++i) {
            Json r;
            r["word"] = word_at(i, spec.n).to_string();
            r["value"] = table.at_index(i).get_str();
            rows.push_back(std::move(r));
        }
        j["weights"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
        return rep.ok() ? 0 : 1;
    }
    std::cout << rep.to_text();
    return rep.ok() ? 0 : 1;
}

int run_model(const Options& o) {
    const DomainSpec spec = load_spec(o);
    VerificationReport rep = make_report("model", o, spec);
    model_checks(rep, "spec", spec, suite_options(o));
    return finish(rep, o);
}

int run_toeplitz(const std::string& mode, const Options& o) {
    const DomainSpec spec = load_spec(o);
    const SuiteOptions so = suite_options(o);
    const WeightTable table = weights_by_convolution(spec, o.max_len);
    VerificationReport rep = make_report("toeplitz " + mode, o, spec);
    if (mode == "check") {
        if (o.op_path.empty()) throw ConfigError("toeplitz check needs --op");
        const TruncatedOperator t = operator_from_json(load_json(o.op_path), spec.n);
        if (t.basis.max_length() > table.max_length())
            throw ConfigError("operator truncation exceeds --max-len");
        const ToeplitzReport r = is_multi_toeplitz(t, table, o.tol);
        const double scale = std::max(1.0, r.scale);
        rep.run("operator/structure", "shift relations of a weighted right multi-Toeplitz operator", o.tol, [&] {
            return Outcome(r.worst_structure_residual / scale, r.structure_witness.empty() ? "" : "witness " + r.structure_witness);
        });
        rep.run("operator/incomparable", "zero blocks at incomparable word pairs", o.tol, [&] {
            return Outcome(r.worst_incomparable_entry / scale, r.incomparable_witness.empty() ? "" : "witness " + r.incomparable_witness);
        });
        return finish(rep, o);
    }
    if (mode == "build") {
        if (o.symbol_path.empty()) throw ConfigError("toeplitz build needs --symbol");
        if (o.out.empty()) throw ConfigError("toeplitz build needs --out");
        if (o.radius < 0 || o.radius > 1) throw ConfigError("--radius must lie in [0, 1]");
        const MultiToeplitzSymbol sym = symbol_from_json(load_json(o.symbol_path));
        save_text(o.out, operator_to_json(symbol_to_operator(sym, table, o.radius, o.max_len)).dump() + "\n");
        std::cout << "wrote " << o.out << "\n";
        return 0;
    }
    std::optional<MultiToeplitzSymbol> sym;
    if (!o.symbol_path.empty()) sym = symbol_from_json(load_json(o.symbol_path));
    toeplitz_checks(rep, "spec", spec, so, sym);
    return finish(rep, o);
}

int run_berezin(const Options& o) {
    const DomainSpec spec = load_spec(o);
    std::optional<OperatorTuple> x;
    if (!o.tuple_path.empty()) x = tuple_from_json(load_json(o.tuple_path));
    if (x && x->n() != spec.n) throw ConfigError("tuple size does not match the domain spec");
    VerificationReport rep = make_report("berezin", o, spec);
    berezin_checks(rep, "spec", spec, suite_options(o), x);
    return finish(rep, o);
}

int run_pluriharmonic(const Options& o) {
    const DomainSpec spec = load_spec(o);
    std::optional<MultiToeplitzSymbol> sym;
    if (!o.symbol_path.empty()) sym = symbol_from_json(load_json(o.symbol_path));
    VerificationReport rep = make_report("pluriharmonic", o, spec);
    pluriharmonic_checks(rep, "spec", spec, suite_options(o), sym);
    return finish(rep, o);
}

int run_cauchy(const Options& o) {
    const DomainSpec spec = load_spec(o);
    std::optional<OperatorTuple> x;
    if (!o.tuple_path.empty()) x = tuple_from_json(load_json(o.tuple_path));
    if (x && x->n() != spec.n) throw ConfigError("tuple size does not match the domain spec");
    VerificationReport rep = make_report("cauchy", o, spec);
    cauchy_checks(rep, "spec", spec, suite_options(o), x);
    return finish(rep, o);
}

int run_verify_all(const Options& o) {
    VerificationReport rep = verify_all(suite_options(o));
    return finish(rep, o);
}

void common_flags(CLI::App* app, Options& o, bool needs_spec) {
    auto* spec = app->add_option("--spec", o.spec_path, "domain spec JSON")->check(CLI::ExistingFile);
    if (needs_spec) spec->required();
    app->add_option("--max-len", o.max_len, "truncation length N");
    app->add_option("--aux-dim", o.aux_dim, "coefficient space dimension for random symbols");
    app->add_option("--tol", o.tol, "tolerance");
    app->add_option("--radii", o.radii, "radius grid, comma separated")->delimiter(',');
    app->add_option("--seed", o.seed, "seed for random inputs");
    app->add_option("--samples", o.samples, "random samples per check");
    app->add_option("--out", o.out, "output path");
    app->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for noncommutative regular domains"};
    app.require_subcommand(1);
    Options o;

    auto* weights = app.add_subcommand("weights", "weight tables and oracle equality");
    common_flags(weights, o, true);
    auto* model = app.add_subcommand("model", "identities of the weighted creation operators");
    common_flags(model, o, true);
    auto* toeplitz = app.add_subcommand("toeplitz", "multi-Toeplitz detection, construction and roundtrip");
    toeplitz->require_subcommand(0, 1);
    auto* t_check = toeplitz->add_subcommand("check", "test an operator file");
    auto* t_build = toeplitz->add_subcommand("build", "write phi(rW) for a symbol file");
    auto* t_round = toeplitz->add_subcommand("roundtrip", "symbol to operator to symbol");
    common_flags(toeplitz, o, false);
    for (auto* sub : {t_check, t_build, t_round}) {
        common_flags(sub, o, false);
        sub->add_option("--op", o.op_path, "operator JSON")->check(CLI::ExistingFile);
        sub->add_option("--symbol", o.symbol_path, "symbol JSON")->check(CLI::ExistingFile);
        sub->add_option("--radius", o.radius, "radius r for build");
    }
    auto* berezin = app.add_subcommand("berezin", "membership, purity and Berezin identities");
    common_flags(berezin, o, true);
    berezin->add_option("--tuple", o.tuple_path, "operator tuple JSON")->check(CLI::ExistingFile);
    auto* pluri = app.add_subcommand("pluriharmonic", "radius test, Gamma positivity, metric and roundtrip");
    common_flags(pluri, o, true);
    pluri->add_option("--symbol", o.symbol_path, "symbol JSON")->check(CLI::ExistingFile);
    auto* cauchy = app.add_subcommand("cauchy", "spectral radius, Cauchy transform and functional calculus");
    common_flags(cauchy, o, true);
    cauchy->add_option("--tuple", o.tuple_path, "operator tuple JSON")->check(CLI::ExistingFile);
    auto* all = app.add_subcommand("verify-all", "full suite over the built-in corpus");
    common_flags(all, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*weights) return run_weights(o);
        if (*model) return run_model(o);
        if (*toeplitz) {
            const std::string mode = *t_check ? "check" : *t_build ? "build" : "roundtrip";
            return run_toeplitz(mode, o);
        }
        if (*berezin) return run_berezin(o);
        if (*pluri) return run_pluriharmonic(o);
        if (*cauchy) return run_cauchy(o);
        if (*all) return run_verify_all(o);
    } catch (const ConfigError& e) {
        std::cerr << "ncdomain: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "ncdomain: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ncdomain: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
