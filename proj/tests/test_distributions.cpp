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

#include "falg/distributions.hpp"

using falg::Bivariate;
using falg::ExpandIn;
using falg::ExpRange;
using falg::Rational;
using falg::ScalarBivariate;
using falg::Window2;
using falg::Window3;

namespace {

// Oracle: build the j-th w-derivative of delta(z-w) by literally
// differentiating each w^n term j times, one derivative at a time.
ScalarBivariate oracle_delta_derivative(unsigned j, Window2 win) {
    ScalarBivariate out(win);
    for (long long n = win.z.hi >= -1 ? -(static_cast<long long>(win.z.hi) + 1) : 0;
         ; ++n) {
        int p = static_cast<int>(-n - 1);
        if (p < win.z.lo) break;
        if (!win.z.contains(p)) continue;
        Rational coeff(1);
        long long e = n;
        for (unsigned k = 0; k < j; ++k) {
            coeff *= Rational(e);
            e -= 1;
        }
        if (coeff.is_zero()) continue;
        if (win.w.contains(static_cast<int>(e))) out.set_cell(p, static_cast<int>(e), coeff);
    }
    return out;
}

// Oracle: cellwise convolution with no window bookkeeping, evaluated only on
// cells whose full set of contributions is available.
Rational oracle_product_cell(const ScalarBivariate& a, const ScalarBivariate& b, int p, int q) {
    Rational acc(0);
    for (const auto& [ij, v] : a.cells()) {
        acc += v * b.cell(p - ij.first, q - ij.second);
    }
    return acc;
}

}  // namespace

TEST_CASE("delta cells sit on the anti-diagonal with unit values") {
    Window2 win = Window2::symmetric(6);
    ScalarBivariate d = falg::delta_derivative(0, win);
    CHECK(d.cell(-1, 0) == Rational(1));
    CHECK(d.cell(-3, 2) == Rational(1));
    CHECK(d.cell(0, 0) == Rational(0));
    for (int p = -6; p <= 6; ++p)
        for (int q = -6; q <= 6; ++q)
            CHECK(d.cell(p, q) == Rational(p + q == -1 ? 1 : 0));
}

TEST_CASE("delta derivatives match term-by-term differentiation") {
    Window2 win = Window2::symmetric(8);
    for (unsigned j = 0; j <= 6; ++j) {
        CHECK(falg::delta_derivative(j, win) == oracle_delta_derivative(j, win));
    }
    ScalarBivariate d1 = falg::delta_derivative(1, win);
    CHECK(d1.cell(-3, 1) == Rational(2));  // d/dw of w^2
    ScalarBivariate d2 = falg::delta_derivative(2, win);
    CHECK(d2.cell(-1, -2) == Rational(0));  // n = 0 kills the falling factorial
}

TEST_CASE("expand_power matches the finite binomial for n >= 0") {
    Window2 win = Window2::symmetric(7);
    for (int n = 0; n <= 5; ++n) {
        ScalarBivariate ez = falg::expand_power(n, ExpandIn::z, win);
        ScalarBivariate ew = falg::expand_power(n, ExpandIn::w, win);
        CHECK(ez == ew);  // both give the same polynomial
    }
    ScalarBivariate e1 = falg::expand_power(1, ExpandIn::z, win);
    CHECK(e1.cell(1, 0) == Rational(1));
    CHECK(e1.cell(0, 1) == Rational(-1));
    CHECK(e1.cells().size() == 2);
}

TEST_CASE("expand_power of n = -1 matches the geometric series oracle") {
    Window2 win = Window2::symmetric(9);
    ScalarBivariate in_w = falg::expand_power(-1, ExpandIn::w, win);
    ScalarBivariate in_z = falg::expand_power(-1, ExpandIn::z, win);
    // -w^{-1} sum_k (z/w)^k  and  z^{-1} sum_k (w/z)^k
    for (int k = 0; k <= 8; ++k) {
        CHECK(in_w.cell(k, -k - 1) == Rational(-1));
        CHECK(in_z.cell(-k - 1, k) == Rational(1));
    }
    ScalarBivariate diff = in_z;
    diff -= in_w;
    CHECK(diff == falg::delta_derivative(0, win));
}

TEST_CASE("negative power expansions are multiplicative with (z-w)") {
    Window2 win = Window2::symmetric(10);
    ScalarBivariate step = falg::expand_power(1, ExpandIn::z, win);
    for (int n = -4; n <= 3; ++n) {
        for (ExpandIn dir : {ExpandIn::z, ExpandIn::w}) {
            ScalarBivariate lower = falg::expand_power(n, dir, win);
            auto prod = falg::multiply_scalar(step, lower);
            REQUIRE(prod.has_value());
            ScalarBivariate expect = falg::expand_power(n + 1, dir, prod->window());
            for (const auto& [pq, v] : prod->cells())
                CHECK(v == expect.cell(pq.first, pq.second));
            for (const auto& [pq, v] : expect.cells())
                CHECK(v == prod->cell(pq.first, pq.second));
        }
    }
}

TEST_CASE("residue extracts the z^{-1} row") {
    Window2 win = Window2::symmetric(5);
    auto row = falg::residue_z(falg::delta_derivative(0, win));
    for (int q = -5; q <= 5; ++q) CHECK(row.coeff(q) == Rational(q == 0 ? 1 : 0));

    auto none = falg::residue_z(falg::expand_power(0, ExpandIn::z, win));
    CHECK(none.coeffs.empty());

    auto geo = falg::residue_z(falg::expand_power(-1, ExpandIn::z, win));
    for (int q = -5; q <= 5; ++q) CHECK(geo.coeff(q) == Rational(q == 0 ? 1 : 0));

    Window2 off{ExpRange(0, 4), ExpRange(-4, 4)};
    CHECK_THROWS_AS(falg::residue_z(falg::expand_power(0, ExpandIn::z, off)),
                    std::invalid_argument);
}

TEST_CASE("multiply_scalar agrees with the convolution oracle") {
    Window2 win = Window2::symmetric(8);
    ScalarBivariate a = falg::expand_power(2, ExpandIn::z, win);
    ScalarBivariate b = falg::delta_derivative(1, win);
    auto prod = falg::multiply_scalar(a, b);
    REQUIRE(prod.has_value());
    for (int p = prod->window().z.lo; p <= prod->window().z.hi; ++p)
        for (int q = prod->window().w.lo; q <= prod->window().w.hi; ++q)
            CHECK(prod->cell(p, q) == oracle_product_cell(a, b, p, q));
}

TEST_CASE("identity scalar multiplies to the interior restriction") {
    Window2 win = Window2::symmetric(6);
    ScalarBivariate one = falg::expand_power(0, ExpandIn::z, win);
    ScalarBivariate d = falg::delta_derivative(0, win);
    auto prod = falg::multiply_scalar(one, d);
    REQUIRE(prod.has_value());
    for (const auto& [pq, v] : prod->cells()) CHECK(v == d.cell(pq.first, pq.second));
}

TEST_CASE("classic delta identities vanish on the interior window") {
    Window2 win = Window2::symmetric(10);
    for (unsigned j = 0; j <= 6; ++j) {
        // (z-w)^{j+1} * d^j_w delta(z-w) = 0
        ScalarBivariate power =
            falg::expand_power(static_cast<int>(j) + 1, ExpandIn::z, win);
        auto prod = falg::multiply_scalar(power, falg::delta_derivative(j, win));
        REQUIRE(prod.has_value());
        CHECK(prod->is_zero());
        CHECK(prod->window().z.lo <= prod->window().z.hi);
    }
}

TEST_CASE("empty interior window is reported, not silently shrunk") {
    Window2 tiny{ExpRange(0, 1), ExpRange(0, 1)};
    ScalarBivariate wide(Window2{ExpRange(-3, 3), ExpRange(0, 0)});
    wide.set_cell(-3, 0, Rational(1));
    wide.set_cell(3, 0, Rational(1));
    ScalarBivariate data(tiny);
    data.set_cell(0, 0, Rational(1));
    CHECK_FALSE(falg::multiply_scalar(wide, data).has_value());
}

TEST_CASE("taylor delta identity holds on the symmetric window") {
    auto res = falg::taylor_delta_check(Window3::symmetric(6));
    CHECK(res.holds);
    CHECK_FALSE(res.witness_cell.has_value());
}

TEST_CASE("taylor delta with x collapsed to zero is the plain delta row") {
    Window3 win{ExpRange(-5, 5), ExpRange(-5, 5), ExpRange(0, 0)};
    auto res = falg::taylor_delta_check(win);
    CHECK(res.holds);
    falg::Trivariate lhs = falg::taylor_delta_lhs(win);
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            CHECK(lhs.cell(a, b, 0) == Rational(a + b == -1 ? 1 : 0));
}

TEST_CASE("coefficient arrays serialize with window and num/den cells") {
    Window2 win{ExpRange(-2, 2), ExpRange(-2, 2)};
    ScalarBivariate d(win);
    d.set_cell(1, -1, Rational(3, 2));
    auto j = falg::bivariate_json(d);
    CHECK(j["window"]["z"] == nlohmann::json({-2, 2}));
    REQUIRE(j["cells"].size() == 1);
    CHECK(j["cells"][0]["p"] == 1);
    CHECK(j["cells"][0]["q"] == -1);
    CHECK(j["cells"][0]["value"] == "3/2");
}

TEST_CASE("dropping one term on the right is caught with a witness cell") {
    Window3 win = Window3::symmetric(6);
    falg::Trivariate lhs = falg::taylor_delta_lhs(win);
    falg::Trivariate mutated = falg::taylor_delta_rhs(win, 2u);
    auto diff = lhs.first_difference(mutated);
    REQUIRE(diff.has_value());
    CHECK((*diff)[2] == 2);  // the dropped x power
    CHECK(lhs.cell(0, -3, 2) == Rational(1));
    CHECK(mutated.cell(0, -3, 2) == Rational(0));
}
