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

#include "falg/report.hpp"

#include <algorithm>

namespace falg {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

CheckReport CheckReport::pass(std::string name, nlohmann::json params, nlohmann::json window) {
    return CheckReport{std::move(name), std::move(params), Verdict::holds, std::move(window), {}};
}

CheckReport CheckReport::fail(std::string name, nlohmann::json params, nlohmann::json window,
                              nlohmann::json witness) {
    return CheckReport{std::move(name), std::move(params), Verdict::fails, std::move(window),
                       std::move(witness)};
}

CheckReport CheckReport::not_applicable(std::string name, nlohmann::json params,
                                        std::string reason) {
    CheckReport r{std::move(name), std::move(params), Verdict::inapplicable,
                  nlohmann::json::object(), {}};
    r.params["reason"] = std::move(reason);
    return r;
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["verdict"] = to_string(verdict);
    j["params"] = params;
    j["window"] = window;
    if (witness) j["witness"] = *witness;
    return j;
}

const CheckReport* SuiteReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool SuiteReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckReport& c) { return c.verdict == Verdict::holds; });
}

nlohmann::json SuiteReport::to_json() const {
    std::vector<const CheckReport*> order;
    order.reserve(checks.size());
    for (const auto& c : checks) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const CheckReport* a, const CheckReport* b) {
        if (a->name != b->name) return a->name < b->name;
        return a->params.dump() < b->params.dump();
    });
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = params;
    j["exact"] = true;
    j["checks"] = nlohmann::json::array();
    for (const auto* c : order) j["checks"].push_back(c->to_json());
    return j;
}

std::string SuiteReport::to_text() const {
    std::string out = "suite " + suite + "  params=" + params.dump() + "\n";
    nlohmann::json sorted = to_json();
    for (const auto& c : sorted["checks"]) {
        out += "  [" + c["verdict"].get<std::string>() + "] " + c["name"].get<std::string>();
        if (c.contains("window") && !c["window"].empty())
            out += "  window=" + c["window"].dump();
        if (c.contains("witness")) out += "\n      witness: " + c["witness"].dump();
        out += "\n";
    }
    return out;
}

}  // namespace falg

