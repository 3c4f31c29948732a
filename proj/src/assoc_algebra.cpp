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

#include "falg/assoc_algebra.hpp"

#include <stdexcept>

namespace falg {

AssocAlgebraModel::AssocAlgebraModel(std::vector<std::string> basis_names,
                                     std::vector<std::vector<MatVec>> products, MatVec unit,
                                     std::vector<MatVec> derivation_columns)
    : names_(std::move(basis_names)),
      products_(std::move(products)),
      unit_(std::move(unit)),
      derivation_(std::move(derivation_columns)) {
    validate();
}

MatVec AssocAlgebraModel::multiply(const MatVec& a, const MatVec& b) const {
    MatVec out;
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [j, cj] : b.terms()) {
            MatVec term = products_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            term *= ci * cj;
            out += term;
        }
    }
    return out;
}

MatVec AssocAlgebraModel::apply_derivation(const MatVec& v) const {
    MatVec out;
    for (const auto& [i, c] : v.terms()) {
        MatVec img = derivation_[static_cast<std::size_t>(i)];
        img *= c;
        out += img;
    }
    return out;
}

std::vector<MatVec> AssocAlgebraModel::basis_up_to(int) const {
    std::vector<MatVec> out;
    for (int i = 0; i < dim(); ++i) out.push_back(MatVec::unit(i));
    return out;
}

std::string AssocAlgebraModel::render(const MatVec& v) const {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : v.terms()) {
        if (!out.empty()) out += " + ";
        if (c.is_one())
            out += names_[static_cast<std::size_t>(i)];
        else
            out += c.to_string() + "*" + names_[static_cast<std::size_t>(i)];
    }
    return out;
}

void AssocAlgebraModel::validate() const {
    std::size_t d = names_.size();
    if (products_.size() != d || derivation_.size() != d)
        throw std::invalid_argument("AssocAlgebraModel: dimension mismatch");
    for (const auto& row : products_)
        if (row.size() != d) throw std::invalid_argument("AssocAlgebraModel: ragged products");

    for (std::size_t i = 0; i < d; ++i) {
        MatVec e = MatVec::unit(static_cast<int>(i));
        if (!(multiply(unit_, e) == e) || !(multiply(e, unit_) == e))
            throw std::invalid_argument("AssocAlgebraModel: unit law fails on " + names_[i]);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                MatVec ei = MatVec::unit(static_cast<int>(i));
                MatVec ej = MatVec::unit(static_cast<int>(j));
                MatVec ek = MatVec::unit(static_cast<int>(k));
                if (!(multiply(multiply(ei, ej), ek) == multiply(ei, multiply(ej, ek))))
                    throw std::invalid_argument("AssocAlgebraModel: associativity fails");
            }
        }
    }
    if (!apply_derivation(unit_).is_zero())
        throw std::invalid_argument("AssocAlgebraModel: derivation does not kill the unit");
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            MatVec ei = MatVec::unit(static_cast<int>(i));
            MatVec ej = MatVec::unit(static_cast<int>(j));
            MatVec lhs = apply_derivation(multiply(ei, ej));
            MatVec rhs = multiply(apply_derivation(ei), ej) + multiply(ei, apply_derivation(ej));
            if (!(lhs == rhs))
                throw std::invalid_argument("AssocAlgebraModel: Leibniz rule fails");
        }
    }
}

nlohmann::json mat_state_json(const MatVec& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [i, c] : v.terms()) terms.push_back({{"basis", i}, {"coeff", c.to_string()}});
    return terms;
}

MatVec mat_state_from_json(const nlohmann::json& j) {
    MatVec v;
    for (const auto& term : j)
        v.add_term(term.at("basis").get<int>(),
                   Rational::from_string(term.at("coeff").get<std::string>()));
    return v;
}

StateFormat<int> assoc_format(const AssocAlgebraModel& model) {
    return StateFormat<int>{[model](const MatVec& v) { return model.render(v); },
                            [](const MatVec& v) { return mat_state_json(v); }};
}

AssocAlgebraModel mat2_inner_derivation_model() {
    // basis E11, E12, E21, E22 at indices 0..3; E_{ij} E_{kl} = delta_{jk} E_{il}
    auto idx = [](int i, int j) { return 2 * i + j; };
    std::vector<std::vector<MatVec>> products(4, std::vector<MatVec>(4));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    products[static_cast<std::size_t>(idx(i, j))]
                            [static_cast<std::size_t>(idx(k, l))] =
                        (j == k) ? MatVec::unit(idx(i, l)) : MatVec();
    MatVec unit = MatVec::unit(idx(0, 0)) + MatVec::unit(idx(1, 1));

    // T = [E12, -]
    MatVec e12 = MatVec::unit(idx(0, 1));
    std::vector<MatVec> derivation;
    AssocAlgebraModel plain({"E11", "E12", "E21", "E22"}, products, unit,
                            std::vector<MatVec>(4));  // zero derivation, for multiply()
    for (int b = 0; b < 4; ++b) {
        MatVec e = MatVec::unit(b);
        derivation.push_back(plain.multiply(e12, e) - plain.multiply(e, e12));
    }
    return AssocAlgebraModel({"E11", "E12", "E21", "E22"}, products, unit, derivation);
}

AssocAlgebraModel diag2_commutative_model() {
    std::vector<std::vector<MatVec>> products(2, std::vector<MatVec>(2));
    products[0][0] = MatVec::unit(0);
    products[1][1] = MatVec::unit(1);
    MatVec unit = MatVec::unit(0) + MatVec::unit(1);
    return AssocAlgebraModel({"D1", "D2"}, products, unit, std::vector<MatVec>(2));
}

Algebra<int> holomorphic_algebra(const AssocAlgebraModel& model, std::string id) {
    Algebra<int> alg;
    alg.id = std::move(id);
    alg.vacuum = model.unit();
    alg.translate = [model](const MatVec& v) { return model.apply_derivation(v); };
    alg.basis_up_to = [model](int d) { return model.basis_up_to(d); };
    alg.fmt = assoc_format(model);
    StateFormat<int> fmt = alg.fmt;
    alg.field_of = memoized_field_of<int>([model, fmt](const MatVec& a) {
        return Field<int>(
            "Y(" + fmt.render(a) + ")", Parity::even,
            [model, a](int n, const MatVec& b) {
                if (n >= 0) return MatVec();
                MatVec ta = a;
                for (int j = 1; j <= -n - 1; ++j) {
                    ta = model.apply_derivation(ta);
                    if (ta.is_zero()) return MatVec();
                    ta *= Rational(1, j);
                }
                return model.multiply(ta, b);
            },
            [](const MatVec&) { return 0; });
    });
    return alg;
}

}  // namespace falg

