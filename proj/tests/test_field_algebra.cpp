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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "falg/assoc_algebra.hpp"
#include "falg/field_algebra.hpp"

using falg::Algebra;
using falg::Field;
using falg::FockVector;
using falg::MatVec;
using falg::Monomial;
using falg::Rational;

namespace {

falg::Algebra<Monomial> boson(int degree = 6) {
    auto out = falg::free_boson_algebra(degree, 4, 8);
    REQUIRE(out.ok());
    for (const auto& r : out.preconditions) REQUIRE(r.verdict == falg::Verdict::holds);
    return *out.algebra;
}

}  // namespace

TEST_CASE("rational solver reconstructs targets from its row combinations") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t cols = 5, nrows = 4;
        std::vector<std::vector<Rational>> rows;
        falg::detail::RationalSolver solver;
        for (std::size_t r = 0; r < nrows; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < cols; ++c) row.push_back(Rational(coeff(rng)));
            rows.push_back(row);
            solver.add_row(row);
        }
        // a random combination of the rows must be solvable and reconstruct
        std::vector<Rational> lambda;
        std::vector<Rational> target(cols, Rational(0));
        for (std::size_t r = 0; r < nrows; ++r) {
            lambda.push_back(Rational(coeff(rng)));
            for (std::size_t c = 0; c < cols; ++c) target[c] += lambda[r] * rows[r][c];
        }
        auto combo = solver.solve(target);
        REQUIRE(combo.has_value());
        std::vector<Rational> rebuilt(cols, Rational(0));
        for (std::size_t r = 0; r < combo->size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) rebuilt[c] += (*combo)[r] * rows[r][c];
        CHECK(rebuilt == target);
    }
    // a vector outside the span is refused
    falg::detail::RationalSolver solver;
    solver.add_row({Rational(1), Rational(0), Rational(0)});
    solver.add_row({Rational(0), Rational(1), Rational(0)});
    CHECK_FALSE(solver.solve({Rational(0), Rational(0), Rational(1)}).has_value());
    CHECK(solver.solve({Rational(2), Rational(-3), Rational(0)}).has_value());
    CHECK(solver.rank() == 2);
}

TEST_CASE("state keys render as iterated mode applications") {
    falg::StateKey k = falg::StateKey::vacuum_key().wrapped(0, -1).wrapped(0, -2);
    CHECK(k.render({"a"}) == "a[-2]a[-1]|0>");
    CHECK(falg::StateKey::vacuum_key().render({"a"}) == "|0>");
}

TEST_CASE("free boson build recovers the generator field") {
    auto alg = boson(5);
    Field<Monomial> y1 = alg.field_of(falg::fock_state({1}));
    auto grid = falg::fock_grid(5, 4);
    CHECK_FALSE(falg::fields_difference_witness(y1, falg::alpha_field(), grid).has_value());
}

TEST_CASE("field of the deeper state is the divided derivative") {
    auto alg = boson(5);
    Field<Monomial> y2 = alg.field_of(falg::fock_state({2}));
    auto grid = falg::fock_grid(5, 4);
    CHECK_FALSE(falg::fields_difference_witness(y2, falg::derivative(falg::alpha_field()), grid)
                    .has_value());
    // x3 corresponds to the second divided derivative
    Field<Monomial> y3 = alg.field_of(falg::fock_state({3}));
    CHECK_FALSE(falg::fields_difference_witness(
                    y3, falg::divided_derivative(falg::alpha_field(), 2), grid)
                    .has_value());
}

TEST_CASE("field of the vacuum is the identity") {
    auto alg = boson(4);
    auto grid = falg::fock_grid(4, 4);
    CHECK_FALSE(falg::fields_difference_witness(alg.field_of(alg.vacuum),
                                                falg::identity_field<Monomial>(), grid)
                    .has_value());
}

TEST_CASE("recursion is presentation independent on the window") {
    auto grid = falg::fock_grid(5, 3);
    Field<Monomial> a = falg::alpha_field();
    auto id = falg::identity_field<Monomial>();
    // two presentations of x2 x1 |0>
    Field<Monomial> p1 =
        falg::nth_product(a, falg::nth_product(a, id, -2), -1);
    Field<Monomial> p2 =
        falg::nth_product(a, falg::nth_product(a, id, -1), -2);
    CHECK_FALSE(falg::fields_difference_witness(p1, p2, grid).has_value());
    // and both agree with the built algebra's assignment
    auto alg = boson(5);
    CHECK_FALSE(
        falg::fields_difference_witness(p1, alg.field_of(falg::fock_state({2, 1})), grid)
            .has_value());
}

TEST_CASE("created states come back out of the fields") {
    auto alg = boson(6);
    for (const auto& v : alg.basis_up_to(5)) {
        Field<Monomial> f = alg.field_of(v);
        CHECK(f.mode(-1, alg.vacuum) == v);
        for (int n = 0; n <= f.ann_bound(alg.vacuum) + 2; ++n)
            CHECK(f.mode(n, alg.vacuum).is_zero());
    }
}

TEST_CASE("translation covariance holds modewise for the built algebra") {
    auto alg = boson(5);
    auto grid = falg::fock_grid(4, 3);
    for (const auto& a : alg.basis_up_to(3)) {
        Field<Monomial> ya = alg.field_of(a);
        Field<Monomial> yta = alg.field_of(alg.translate(a));
        for (const auto& v : grid.vectors) {
            int hi = std::max(grid.mode_window, std::max(ya.ann_bound(v), yta.ann_bound(v)));
            for (int n = -grid.mode_window; n <= hi; ++n) {
                FockVector expect = ya.mode(n - 1, v);
                expect *= Rational(-n);
                CHECK(yta.mode(n, v) == expect);
                CHECK(yta.mode(n, v) ==
                      alg.translate(ya.mode(n, v)) - ya.mode(n, alg.translate(v)));
            }
        }
    }
}

TEST_CASE("non-spanning generators are refused with the gap listed") {
    // beta creates nothing from the vacuum
    auto out = falg::build_from_generators<Monomial>({falg::beta_field()}, falg::FockModel{},
                                                     3, 3, 6, falg::fock_format());
    CHECK_FALSE(out.ok());
    const falg::CheckReport* span = nullptr;
    for (const auto& r : out.preconditions)
        if (r.name == "build-spanning") span = &r;
    REQUIRE(span != nullptr);
    CHECK(span->verdict == falg::Verdict::fails);
    REQUIRE(span->witness.has_value());
    CHECK((*span->witness)["unreached_basis_states"].size() == 6);  // degrees 1..3
}

TEST_CASE("exp(zT) on a constant series stacks divided translate powers") {
    falg::UnivariateSeries<FockVector> s;
    s.min_exp = 0;
    s.max_exp = 4;
    s.set_coeff(0, falg::fock_state({1}));
    auto translate = [](const FockVector& v) { return falg::fock_translate(v); };
    auto out = falg::apply_exp_zT<Monomial>(s, translate);
    FockVector cur = falg::fock_state({1});
    for (int j = 0; j <= 4; ++j) {
        if (j > 0) {
            cur = falg::fock_translate(cur);
            cur *= Rational(1, j);
        }
        CHECK(out.coeff(j) == cur);
    }
}

TEST_CASE("exp(zT) keeps the lowest coefficient untouched") {
    falg::UnivariateSeries<FockVector> s;
    s.min_exp = -1;
    s.max_exp = 2;
    s.set_coeff(-1, falg::fock_state({2}));
    auto translate = [](const FockVector& v) { return falg::fock_translate(v); };
    auto out = falg::apply_exp_zT<Monomial>(s, translate);
    CHECK(out.coeff(-1) == falg::fock_state({2}));
}

TEST_CASE("opposite fields coincide with the direct ones on the free boson") {
    auto alg = boson(5);
    auto grid = falg::fock_grid(4, 4);
    for (const auto& a : alg.basis_up_to(4)) {
        Field<Monomial> x = falg::opposite_field(alg, a);
        Field<Monomial> y = alg.field_of(a);
        for (const auto& v : grid.vectors) {
            for (int n = -4; n <= std::max(4, y.ann_bound(v)); ++n) {
                CHECK(x.mode(n, v) == y.mode(n, v));
            }
        }
    }
}

TEST_CASE("opposite field of the vacuum is the identity") {
    auto alg = boson(4);
    auto grid = falg::fock_grid(4, 3);
    CHECK_FALSE(falg::fields_difference_witness(falg::opposite_field(alg, alg.vacuum),
                                                falg::identity_field<Monomial>(), grid)
                    .has_value());
}

TEST_CASE("matrix model validates its axioms and rejects bad data") {
    auto model = falg::mat2_inner_derivation_model();
    CHECK(model.dim() == 4);
    // T(E21) = [E12, E21] = E11 - E22
    MatVec expect = MatVec::unit(0) - MatVec::unit(3);
    CHECK(model.apply_derivation(MatVec::unit(2)) == expect);
    CHECK(model.apply_derivation(model.unit()).is_zero());

    // a broken derivation violates Leibniz
    std::vector<MatVec> bad(4);
    bad[0] = MatVec::unit(1);
    CHECK_THROWS_AS(falg::AssocAlgebraModel({"E11", "E12", "E21", "E22"},
                                            {{model.multiply(MatVec::unit(0), MatVec::unit(0)),
                                              model.multiply(MatVec::unit(0), MatVec::unit(1)),
                                              model.multiply(MatVec::unit(0), MatVec::unit(2)),
                                              model.multiply(MatVec::unit(0), MatVec::unit(3))},
                                             {model.multiply(MatVec::unit(1), MatVec::unit(0)),
                                              model.multiply(MatVec::unit(1), MatVec::unit(1)),
                                              model.multiply(MatVec::unit(1), MatVec::unit(2)),
                                              model.multiply(MatVec::unit(1), MatVec::unit(3))},
                                             {model.multiply(MatVec::unit(2), MatVec::unit(0)),
                                              model.multiply(MatVec::unit(2), MatVec::unit(1)),
                                              model.multiply(MatVec::unit(2), MatVec::unit(2)),
                                              model.multiply(MatVec::unit(2), MatVec::unit(3))},
                                             {model.multiply(MatVec::unit(3), MatVec::unit(0)),
                                              model.multiply(MatVec::unit(3), MatVec::unit(1)),
                                              model.multiply(MatVec::unit(3), MatVec::unit(2)),
                                              model.multiply(MatVec::unit(3), MatVec::unit(3))}},
                                            model.unit(), bad),
                    std::invalid_argument);
}

TEST_CASE("holomorphic fields expand the exponential of the derivation") {
    auto model = falg::mat2_inner_derivation_model();
    auto alg = falg::holomorphic_algebra(model, "mat2");
    // coefficient of z in Y(E21, z) unit: T(E21) = E11 - E22
    Field<int> f = alg.field_of(MatVec::unit(2));
    MatVec expect = MatVec::unit(0) - MatVec::unit(3);
    CHECK(f.mode(-2, alg.vacuum) == expect);
    // nilpotent of order three: z^3 coefficient dies
    CHECK(f.mode(-4, alg.vacuum).is_zero());
    // unit field is the identity
    auto grid_vs = alg.basis_up_to(0);
    Field<int> yu = alg.field_of(alg.vacuum);
    for (const auto& v : grid_vs)
        for (int n = -4; n <= 2; ++n)
            CHECK(yu.mode(n, v) == (n == -1 ? v : MatVec()));
    // modes occupy n <= -1 only
    for (const auto& v : grid_vs)
        for (int n = 0; n <= 3; ++n) CHECK(f.mode(n, v).is_zero());
}

TEST_CASE("opposite multiplication shows up at z = 0 on the matrix algebra") {
    auto model = falg::mat2_inner_derivation_model();
    auto alg = falg::holomorphic_algebra(model, "mat2");
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            MatVec a = MatVec::unit(i), b = MatVec::unit(j);
            Field<int> x = falg::opposite_field(alg, a);
            CHECK(x.mode(-1, b) == model.multiply(b, a));
        }
    }
}

TEST_CASE("locality fails for the noncommutative matrix pair") {
    auto model = falg::mat2_inner_derivation_model();
    auto alg = falg::holomorphic_algebra(model, "mat2");
    MatVec a = MatVec::unit(1), b = MatVec::unit(2);  // E12, E21
    falg::Window2 win = falg::Window2::symmetric(10);
    auto comm =
        falg::commutator_coefficients(alg.field_of(a), alg.field_of(b), alg.vacuum, win);
    // constant term is ab - ba = E11 - E22
    CHECK(comm.cell(0, 0) == MatVec::unit(0) - MatVec::unit(3));
    for (int N = 0; N <= 6; ++N) {
        auto prod = falg::multiply_scalar(falg::expand_power(N, falg::ExpandIn::z, win), comm);
        REQUIRE(prod.has_value());
        CHECK_FALSE(prod->is_zero());
    }
}

TEST_CASE("weak locality holds on the matrix algebra with bound zero") {
    auto model = falg::mat2_inner_derivation_model();
    auto alg = falg::holomorphic_algebra(model, "mat2");
    falg::TestGrid<int> grid{alg.basis_up_to(0), 4, 6, 0, alg.fmt};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            auto wl = falg::weak_locality_search(alg.field_of(MatVec::unit(i)),
                                                 alg.field_of(MatVec::unit(j)), grid);
            REQUIRE(wl.bound.has_value());
            CHECK(*wl.bound == 0);
        }
    }
}

TEST_CASE("diagonal matrices give a fully local holomorphic algebra") {
    auto model = falg::diag2_commutative_model();
    auto alg = falg::holomorphic_algebra(model, "diag2");
    falg::Window2 win = falg::Window2::symmetric(6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(falg::commutator_coefficients(alg.field_of(MatVec::unit(i)),
                                                alg.field_of(MatVec::unit(j)), alg.vacuum, win)
                      .is_zero());
    // X = Y on the commutative model
    falg::TestGrid<int> grid{alg.basis_up_to(0), 4, 6, 0, alg.fmt};
    for (int i = 0; i < 2; ++i)
        CHECK_FALSE(falg::fields_difference_witness(falg::opposite_field(alg, MatVec::unit(i)),
                                                    alg.field_of(MatVec::unit(i)), grid)
                        .has_value());
}

TEST_CASE("uniqueness: the tautological instance passes") {
    auto alg = boson(5);
    auto grid = falg::fock_grid(4, 3);
    FockVector b = falg::fock_state({1});
    auto rep = falg::uniqueness_check(alg, alg.field_of(b), b, alg.basis_up_to(2), grid, 4, 4);
    CHECK(rep.verdict == falg::Verdict::holds);
}

TEST_CASE("uniqueness: perturbed candidates report hypothesis failure") {
    auto alg = boson(5);
    auto grid = falg::fock_grid(4, 3);
    FockVector b = falg::fock_state({1});
    // add a rogue operator at mode 0: B = Y(b) + z^{-1} alpha_2
    Field<Monomial> rogue(
        "rogue", falg::Parity::even,
        [](int n, const FockVector& v) {
            return n == 0 ? falg::alpha_mode(2, v) : FockVector();
        },
        [](const FockVector&) { return 1; });
    Field<Monomial> candidate = falg::field_sum(alg.field_of(b), rogue);
    auto rep = falg::uniqueness_check(alg, candidate, b, alg.basis_up_to(2), grid, 4, 4);
    CHECK(rep.verdict == falg::Verdict::inapplicable);
}

TEST_CASE("uniqueness: beta fails the created-state condition against the alpha state") {
    auto alg = boson(5);
    auto grid = falg::fock_grid(4, 3);
    auto rep = falg::uniqueness_check(alg, falg::beta_field(), falg::fock_state({1}),
                                      alg.basis_up_to(2), grid, 4, 4);
    CHECK(rep.verdict == falg::Verdict::inapplicable);
    CHECK(rep.params["reason"].get<std::string>().find("created state") != std::string::npos);
}
