/*
   Copyright 2026 The falg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "falg/suites.hpp"

namespace {

using falg::CheckReport;
using falg::SuiteReport;
using falg::Verdict;

// Expected-verdict tables live here in the CLI, not in the checkers: the
// library never hard-codes that a check "should" fail. Expected failures
// (the skewsymmetry counterexample, locality on the noncommutative matrix
// algebra, the mutation checks) count as landed.
Verdict expected_verdict(const std::string& suite, const std::string& check) {
    if (suite == "counterexample" && check == "counterexample-skewsymmetry")
        return Verdict::fails;
    if (suite == "holomorphic" &&
        (check == "locality" || check == "skewsymmetry-classification"))
        return Verdict::fails;
    if (suite == "equivalence" && check.find("/mutation-") != std::string::npos)
        return Verdict::fails;
    if (suite == "uniqueness" && check.rfind("uniqueness-perturbed-", 0) == 0)
        return Verdict::inapplicable;
    if (suite == "dong" && check.rfind("dong/", 0) == 0) {
        // Established facts for the shipped triple set: weak locality is
        // order-sensitive, so products of mixed alpha/beta triples fail the
        // (product, c) direction, and any triple carrying both beta and
        // :alpha alpha: already fails the all-ordered-pairs hypothesis.
        bool has_beta = check.find("beta") != std::string::npos;
        bool has_na2 = check.find("na2") != std::string::npos;
        bool pure_beta = check == "dong/beta,beta,beta";
        if (has_beta && has_na2) return Verdict::inapplicable;
        if (has_beta && !pure_beta) return Verdict::fails;
        return Verdict::holds;
    }
    return Verdict::holds;
}

struct Mismatch {
    std::string suite, check;
    Verdict expected, got;
};

int run_command(const std::string& scenario, const falg::SuiteParams& params,
                const std::string& format, std::string out_path) {
    std::vector<SuiteReport> reports;
    try {
        reports = falg::run_scenario(scenario, params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<Mismatch> mismatches;
    for (const auto& suite : reports)
        for (const auto& check : suite.checks) {
            Verdict want = expected_verdict(suite.suite, check.name);
            if (check.verdict != want)
                mismatches.push_back({suite.suite, check.name, want, check.verdict});
        }

    std::string payload;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& suite : reports) j.push_back(suite.to_json());
        payload = j.dump(2) + "\n";
    } else {
        for (const auto& suite : reports) {
            payload += suite.to_text();
            for (const auto& check : suite.checks) {
                Verdict want = expected_verdict(suite.suite, check.name);
                if (check.verdict != want)
                    payload += "  !! " + check.name + ": expected " + to_string(want) +
                               ", got " + to_string(check.verdict) + "\n";
            }
        }
        payload += mismatches.empty()
                       ? "all checks landed on their expected verdicts\n"
                       : std::to_string(mismatches.size()) + " check(s) off expectation\n";
    }

    const char* out_dir = std::getenv("FALG_OUT_DIR");
    if (out_path.empty() && out_dir && *out_dir)
        out_path = std::string(out_dir) + "/" + scenario + (format == "json" ? ".json" : ".txt");
    else if (!out_path.empty() && out_path.front() != '/' && out_dir && *out_dir)
        out_path = std::string(out_dir) + "/" + out_path;

    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path);
        f << payload;
        f.close();
        if (!f.good()) {
            std::cerr << "error: cannot write report to " << out_path << "\n";
            return 3;
        }
    }

    for (const auto& m : mismatches)
        std::cerr << m.suite << "/" << m.check << ": expected " << to_string(m.expected)
                  << ", got " << to_string(m.got) << "\n";
    return mismatches.empty() ? 0 : 1;
}

int explain_command(const std::string& name) {
    std::string text = falg::explain_check(name);
    if (!text.empty()) {
        std::cout << name << ":\n  " << text << "\n";
        return 0;
    }
    std::cerr << "unknown check name: " << name << "\ndid you mean:\n";
    for (const auto& s : falg::check_name_suggestions(name)) std::cerr << "  " << s << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"falg: exact verification of field-algebra identities on concrete "
                 "mode-operator realizations"};
    app.require_subcommand(1);

    falg::SuiteParams params;
    std::string scenario, format = "text", out_path;

    auto* run = app.add_subcommand("run", "run a verification scenario");
    run->add_option("--scenario", scenario,
                    "one of: free-boson, counterexample, holomorphic, dong, uniqueness, "
                    "distributions, equivalence, all")
        ->required();
    run->add_option("--degree", params.degree, "basis degree cap D")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--window", params.window, "mode / exponent window W")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--nmax", params.n_max, "bound and order search cap")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--depth", params.depth, "source key depth")->check(CLI::NonNegativeNumber);
    run->add_option("--seed", params.seed, "seed for grid subsampling");
    run->add_option("--max-triples", params.max_triples, "identity triple cap");
    run->add_option("--perturbations", params.perturbations, "uniqueness perturbation count")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", out_path,
                    "report path (default stdout; FALG_OUT_DIR overrides the directory)");

    std::string check_name;
    auto* explain = app.add_subcommand("explain", "print what a check asserts");
    explain->add_option("name", check_name, "check name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) {
        if (!falg::is_scenario(scenario)) {
            std::cerr << "unknown scenario: " << scenario << "\nknown scenarios:\n";
            for (const auto& s : falg::scenario_names()) std::cerr << "  " << s << "\n";
            return 2;
        }
        return run_command(scenario, params, format, out_path);
    }
    return explain_command(check_name);
}
