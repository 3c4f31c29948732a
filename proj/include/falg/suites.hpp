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

#ifndef FALG_SUITES_HPP
#define FALG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "falg/assoc_algebra.hpp"
#include "falg/verify.hpp"

namespace falg {

struct SuiteParams {
    int degree = 6;        // evaluation vectors up to this degree
    int window = 4;        // mode window W
    int n_max = 8;         // bound / order search cap
    int depth = 3;         // source key depth
    std::uint64_t seed = 1;
    std::size_t max_triples = 20;
    int perturbations = 20;

    nlohmann::json to_json() const {
        return {{"D", degree},   {"W", window}, {"Nmax", n_max},
                {"depth", depth}, {"seed", seed}};
    }
};

/// Named mutations of a built algebra, used by the axiom-equivalence suite:
/// "vacuum" assigns a wrong field to the vacuum, "covariance" splices an
/// unrelated field for the degree-one state, "associativity" rescales the
/// fields of states of degree >= 2.
Algebra<Monomial> mutated_boson(const Algebra<Monomial>& alg, const std::string& kind);

/// Battery grids with the suite's source/triple conventions.
BatteryGrid<Monomial> boson_battery_grid(const SuiteParams& p);
BatteryGrid<int> matrix_battery_grid(const Algebra<int>& alg, const SuiteParams& p);

SuiteReport run_distribution_suite(const SuiteParams& p);
SuiteReport run_counterexample_suite(const SuiteParams& p);
SuiteReport run_free_boson_suite(const SuiteParams& p);
SuiteReport run_holomorphic_suite(const SuiteParams& p);
SuiteReport run_dong_suite(const SuiteParams& p);
SuiteReport run_uniqueness_suite(const SuiteParams& p);
SuiteReport run_equivalence_suite(const SuiteParams& p);

const std::vector<std::string>& scenario_names();  // including "all"
bool is_scenario(const std::string& name);
std::vector<SuiteReport> run_scenario(const std::string& name, const SuiteParams& p);

/// Documentation surface: the exact quantified statement a check asserts.
const std::vector<std::string>& check_names();
std::string explain_check(const std::string& name);  // empty when unknown
std::vector<std::string> check_name_suggestions(const std::string& name);

}  // namespace falg

#endif
