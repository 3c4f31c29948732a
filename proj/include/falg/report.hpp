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

#ifndef FALG_REPORT_HPP
#define FALG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace falg {

enum class Verdict { holds, fails, inapplicable };

std::string to_string(Verdict v);

/// Outcome of one identity check. Every verdict is quantified over the
/// truncation parameters it was established under; a failing verdict always
/// carries a witness that can be re-evaluated in isolation.
struct CheckReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    Verdict verdict = Verdict::inapplicable;
    nlohmann::json window = nlohmann::json::object();
    std::optional<nlohmann::json> witness;

    static CheckReport pass(std::string name, nlohmann::json params, nlohmann::json window);
    static CheckReport fail(std::string name, nlohmann::json params, nlohmann::json window,
                            nlohmann::json witness);
    static CheckReport not_applicable(std::string name, nlohmann::json params,
                                      std::string reason);

    nlohmann::json to_json() const;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CheckReport> checks;

    const CheckReport* find(const std::string& name) const;
    bool all_hold() const;

    // checks emitted sorted by (name, params) for a merge-order-independent report
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace falg

#endif
