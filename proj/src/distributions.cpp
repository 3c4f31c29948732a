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

#include "falg/distributions.hpp"

namespace falg {

Rational izw_coeff(long long m, long long w_exp) {
    if (w_exp < 0) return Rational(0);
    // (z-w)^m = z^m (1 - w/z)^m = sum_k C(m,k) (-1)^k w^k z^{m-k}
    Rational c = binomial(m, static_cast<unsigned>(w_exp));
    if (neg_one_pow(w_exp) < 0) c = -c;
    return c;
}

Rational iwz_coeff(long long m, long long z_exp) {
    if (z_exp < 0) return Rational(0);
    // (z-w)^m = (-w)^m (1 - z/w)^m = sum_k (-1)^{m+k} C(m,k) z^k w^{m-k}
    Rational c = binomial(m, static_cast<unsigned>(z_exp));
    if (neg_one_pow(m + z_exp) < 0) c = -c;
    return c;
}

ScalarBivariate delta_derivative(unsigned j, Window2 window) {
    ScalarBivariate out(window);
    for (int p = window.z.lo; p <= window.z.hi; ++p) {
        long long n = -static_cast<long long>(p) - 1;
        int q = static_cast<int>(n) - static_cast<int>(j);
        if (!window.w.contains(q)) continue;
        Rational v(falling_factorial(n, j), BigInt(1));
        if (!v.is_zero()) out.set_cell(p, q, v);
    }
    return out;
}

ScalarBivariate expand_power(int n, ExpandIn direction, Window2 window) {
    ScalarBivariate out(window);
    if (direction == ExpandIn::z) {
        for (int q = std::max(0, window.w.lo); q <= window.w.hi; ++q) {
            int p = n - q;
            if (!window.z.contains(p)) continue;
            Rational c = izw_coeff(n, q);
            if (!c.is_zero()) out.set_cell(p, q, c);
        }
    } else {
        for (int p = std::max(0, window.z.lo); p <= window.z.hi; ++p) {
            int q = n - p;
            if (!window.w.contains(q)) continue;
            Rational c = iwz_coeff(n, p);
            if (!c.is_zero()) out.set_cell(p, q, c);
        }
    }
    return out;
}

void Trivariate::add_cell(int a, int b, int c, const Rational& v) {
    if (v.is_zero()) return;
    if (!window_.z.contains(a) || !window_.w.contains(b) || !window_.x.contains(c))
        throw std::out_of_range("Trivariate: cell outside window");
    auto [it, inserted] = cells_.emplace(std::array<int, 3>{a, b, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) cells_.erase(it);
    }
}

std::optional<std::array<int, 3>> Trivariate::first_difference(const Trivariate& o) const {
    for (const auto& [abc, v] : cells_)
        if (o.cell(abc[0], abc[1], abc[2]) != v) return abc;
    for (const auto& [abc, v] : o.cells_)
        if (cell(abc[0], abc[1], abc[2]) != v) return abc;
    return std::nullopt;
}

Trivariate taylor_delta_lhs(Window3 window) {
    // delta(y-z) = sum_n y^{-n-1} z^n with y = w+x, and (w+x)^m expanded for
    // |w|>|x| as sum_{c>=0} C(m,c) w^{m-c} x^c.
    Trivariate out(window);
    for (int a = window.z.lo; a <= window.z.hi; ++a) {
        long long m = -static_cast<long long>(a) - 1;
        for (int c = std::max(0, window.x.lo); c <= window.x.hi; ++c) {
            int b = static_cast<int>(m) - c;
            if (!window.w.contains(b)) continue;
            out.add_cell(a, b, c, binomial(m, static_cast<unsigned>(c)));
        }
    }
    return out;
}

Trivariate taylor_delta_rhs(Window3 window, std::optional<unsigned> drop_j) {
    Trivariate out(window);
    for (int j = std::max(0, window.x.lo); j <= window.x.hi; ++j) {
        if (drop_j && static_cast<int>(*drop_j) == j) continue;
        // x^{(j)} = x^j / j! times the j-th w-derivative of delta(z-w)
        Rational inv_fact(BigInt(1), factorial(static_cast<unsigned>(j)));
        for (int a = window.z.lo; a <= window.z.hi; ++a) {
            long long n = -static_cast<long long>(a) - 1;
            int b = static_cast<int>(n) - j;
            if (!window.w.contains(b)) continue;
            Rational v(falling_factorial(n, static_cast<unsigned>(j)), BigInt(1));
            out.add_cell(a, b, j, v * inv_fact);
        }
    }
    return out;
}

TaylorDeltaResult taylor_delta_check(Window3 window) {
    Trivariate lhs = taylor_delta_lhs(window);
    Trivariate rhs = taylor_delta_rhs(window);
    auto diff = lhs.first_difference(rhs);
    TaylorDeltaResult r{!diff.has_value(), window, diff, Rational(0), Rational(0)};
    if (diff) {
        r.lhs_value = lhs.cell((*diff)[0], (*diff)[1], (*diff)[2]);
        r.rhs_value = rhs.cell((*diff)[0], (*diff)[1], (*diff)[2]);
    }
    return r;
}

nlohmann::json window2_json(const Window2& w) { return w.to_json(); }

nlohmann::json bivariate_json(const ScalarBivariate& d) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [pq, v] : d.cells())
        cells.push_back({{"p", pq.first}, {"q", pq.second}, {"value", v.to_string()}});
    return {{"window", d.window().to_json()}, {"cells", cells}};
}

}  // namespace falg

