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

#include "falg/fields.hpp"

#include "falg/field_algebra.hpp"

namespace falg {

Field<Monomial> alpha_field() {
    return Field<Monomial>(
        "alpha", Parity::even,
        [](int n, const FockVector& v) { return alpha_mode(n, v); },
        [](const FockVector& v) { return fock_degree(v) + 1; });
}

Field<Monomial> beta_field() {
    return Field<Monomial>(
        "beta", Parity::even,
        [](int m, const FockVector& v) {
            if (m < 0) return FockVector();
            FockVector out = alpha_mode(m + 1, v);
            out *= Rational(1, m + 1);
            return out;
        },
        [](const FockVector& v) { return fock_degree(v); });
}

nlohmann::json fock_state_json(const FockVector& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : v.terms())
        terms.push_back({{"parts", mono.parts}, {"coeff", c.to_string()}});
    return terms;
}

FockVector fock_state_from_json(const nlohmann::json& j) {
    FockVector v;
    for (const auto& term : j) {
        std::vector<int> parts = term.at("parts").get<std::vector<int>>();
        v.add_term(Monomial(std::move(parts)),
                   Rational::from_string(term.at("coeff").get<std::string>()));
    }
    return v;
}

StateFormat<Monomial> fock_format() {
    return StateFormat<Monomial>{[](const FockVector& v) { return render_fock(v); },
                                 [](const FockVector& v) { return fock_state_json(v); }};
}

TestGrid<Monomial> fock_grid(int degree_cap, int mode_window, int n_max) {
    TestGrid<Monomial> g;
    g.vectors = FockModel{}.basis_up_to(degree_cap);
    g.mode_window = mode_window;
    g.n_max = n_max;
    g.degree_cap = degree_cap;
    g.fmt = fock_format();
    return g;
}

BuildOutcome<Monomial> free_boson_algebra(int degree_cap, int mode_window, int n_max) {
    BuildOutcome<Monomial> out = build_from_generators<Monomial>(
        {alpha_field()}, FockModel{}, degree_cap, mode_window, n_max, fock_format());
    if (out.algebra) out.algebra->id = "free-boson";
    return out;
}

}  // namespace falg

