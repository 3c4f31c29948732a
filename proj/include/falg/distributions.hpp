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

#ifndef FALG_DISTRIBUTIONS_HPP
#define FALG_DISTRIBUTIONS_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "falg/rational.hpp"

namespace falg {

// Exponent conventions used throughout: a field a(z) = sum_n a_(n) z^{-n-1},
// so mode n sits at exponent -n-1 and the coefficient at z^p is a_(-p-1).
// delta(z-w) = sum_n z^{-n-1} w^n, supported on p+q = -1 with unit cells.

struct ExpRange {
    int lo = 0, hi = 0;

    ExpRange() = default;
    ExpRange(int l, int h) : lo(l), hi(h) {
        if (l > h) throw std::invalid_argument("ExpRange: lo > hi");
    }
    static ExpRange symmetric(int r) { return ExpRange(-r, r); }
    bool contains(int e) const { return lo <= e && e <= hi; }
    int size() const { return hi - lo + 1; }
};

struct Window2 {
    ExpRange z, w;
    static Window2 symmetric(int r) { return {ExpRange::symmetric(r), ExpRange::symmetric(r)}; }
    bool contains(int p, int q) const { return z.contains(p) && w.contains(q); }
    nlohmann::json to_json() const {
        return {{"z", {z.lo, z.hi}}, {"w", {w.lo, w.hi}}};
    }
};

struct Window3 {
    ExpRange z, w, x;
    static Window3 symmetric(int r) {
        return {ExpRange::symmetric(r), ExpRange::symmetric(r), ExpRange::symmetric(r)};
    }
    nlohmann::json to_json() const {
        return {{"z", {z.lo, z.hi}}, {"w", {w.lo, w.hi}}, {"x", {x.lo, x.hi}}};
    }
};

/// Finite window of (z-exponent, w-exponent) -> value. The computable shadow
/// of a two-variable formal distribution: equality, sums and products only
/// ever mean "exactly, on the carried window".
template <class V>
class Bivariate {
  public:
    using cell_map = std::map<std::pair<int, int>, V>;

    explicit Bivariate(Window2 win) : window_(win) {}

    const Window2& window() const { return window_; }
    const cell_map& cells() const { return cells_; }
    bool is_zero() const { return cells_.empty(); }

    V cell(int p, int q) const {
        auto it = cells_.find({p, q});
        return it == cells_.end() ? V{} : it->second;
    }

    void set_cell(int p, int q, V v) {
        if (!window_.contains(p, q))
            throw std::out_of_range("Bivariate: cell outside window");
        if (v == V{})
            cells_.erase({p, q});
        else
            cells_.insert_or_assign({p, q}, std::move(v));
    }

    void add_cell(int p, int q, const V& v) {
        if (!window_.contains(p, q))
            throw std::out_of_range("Bivariate: cell outside window");
        auto [it, inserted] = cells_.emplace(std::make_pair(p, q), v);
        if (!inserted) {
            it->second += v;
            if (it->second == V{}) cells_.erase(it);
        }
    }

    Bivariate& operator+=(const Bivariate& o) {
        for (const auto& [pq, v] : o.cells_) add_cell(pq.first, pq.second, v);
        return *this;
    }

    Bivariate& operator-=(const Bivariate& o) {
        for (const auto& [pq, v] : o.cells_) {
            V neg = v;
            neg *= Rational(-1);
            add_cell(pq.first, pq.second, neg);
        }
        return *this;
    }

    Bivariate& operator*=(const Rational& s) {
        if (s.is_zero()) {
            cells_.clear();
            return *this;
        }
        for (auto& [pq, v] : cells_) v *= s;
        return *this;
    }

    bool operator==(const Bivariate& o) const { return cells_ == o.cells_; }

    /// First cell where two windows-compatible arrays differ, if any.
    std::optional<std::pair<int, int>> first_difference(const Bivariate& o) const {
        for (const auto& [pq, v] : cells_)
            if (o.cell(pq.first, pq.second) != v) return pq;
        for (const auto& [pq, v] : o.cells_)
            if (cell(pq.first, pq.second) != v) return pq;
        return std::nullopt;
    }

  private:
    Window2 window_;
    cell_map cells_;
};

using ScalarBivariate = Bivariate<Rational>;

/// Series in one variable with values in V, complete on [min_exp, max_exp],
/// guaranteed zero below min_exp (the series-side image of the field
/// property on a fixed vector), unknown above max_exp.
template <class V>
struct UnivariateSeries {
    int min_exp = 0;
    int max_exp = -1;
    std::map<int, V> coeffs;

    V coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? V{} : it->second;
    }

    void set_coeff(int e, V v) {
        if (v == V{})
            coeffs.erase(e);
        else
            coeffs.insert_or_assign(e, std::move(v));
    }

    bool operator==(const UnivariateSeries& o) const {
        return min_exp == o.min_exp && max_exp == o.max_exp && coeffs == o.coeffs;
    }
};

// Expansion coefficients of (z-w)^m in the two domains. i_{z,w} expands for
// |z|>|w| with w-exponents k >= 0; i_{w,z} for |w|>|z| with z-exponents >= 0.
// For m >= 0 both reduce to the same finite binomial.
Rational izw_coeff(long long m, long long w_exp);  // value at cell (m - w_exp, w_exp)
Rational iwz_coeff(long long m, long long z_exp);  // value at cell (z_exp, m - z_exp)

/// j-th w-derivative of delta(z-w) on a window. Cell (p, q) carries the
/// falling factorial n(n-1)...(n-j+1) with n = -p-1 when q = n-j.
ScalarBivariate delta_derivative(unsigned j, Window2 window);

enum class ExpandIn { z, w };

/// (z-w)^n expanded in the chosen domain, truncated to the window.
ScalarBivariate expand_power(int n, ExpandIn direction, Window2 window);

/// Extracts the z^{-1} row as a series in w. The window must include
/// z-exponent -1; the returned bounds are those of the w-range.
template <class V>
UnivariateSeries<V> residue_z(const Bivariate<V>& d) {
    if (!d.window().z.contains(-1))
        throw std::invalid_argument("residue_z: window does not include z exponent -1");
    UnivariateSeries<V> s;
    s.min_exp = d.window().w.lo;
    s.max_exp = d.window().w.hi;
    for (const auto& [pq, v] : d.cells())
        if (pq.first == -1) s.set_coeff(pq.second, v);
    return s;
}

/// Convolution by a window-truncated scalar array, restricted to the
/// interior sub-window where every contributing cell of the scalar meets a
/// known cell of the operand. The shrunken window is carried by the result;
/// an empty interior yields nullopt.
template <class V>
std::optional<Bivariate<V>> multiply_scalar(const ScalarBivariate& s, const Bivariate<V>& d) {
    if (s.is_zero()) return Bivariate<V>(d.window());
    int zi_min = s.window().z.hi, zi_max = s.window().z.lo;
    int wi_min = s.window().w.hi, wi_max = s.window().w.lo;
    for (const auto& [ij, v] : s.cells()) {
        zi_min = std::min(zi_min, ij.first);
        zi_max = std::max(zi_max, ij.first);
        wi_min = std::min(wi_min, ij.second);
        wi_max = std::max(wi_max, ij.second);
    }
    int z_lo = d.window().z.lo + zi_max, z_hi = d.window().z.hi + zi_min;
    int w_lo = d.window().w.lo + wi_max, w_hi = d.window().w.hi + wi_min;
    if (z_lo > z_hi || w_lo > w_hi) return std::nullopt;
    Bivariate<V> out(Window2{ExpRange(z_lo, z_hi), ExpRange(w_lo, w_hi)});
    for (const auto& [ij, sv] : s.cells()) {
        for (const auto& [pq, dv] : d.cells()) {
            int p = ij.first + pq.first, q = ij.second + pq.second;
            if (!out.window().contains(p, q)) continue;
            V term = dv;
            term *= sv;
            out.add_cell(p, q, term);
        }
    }
    return out;
}

/// Scalar coefficient array in three variables (z, w, x); only what the
/// Taylor/delta comparison needs, no general n-variable machinery.
class Trivariate {
  public:
    using cell_map = std::map<std::array<int, 3>, Rational>;

    explicit Trivariate(Window3 win) : window_(win) {}
    const Window3& window() const { return window_; }
    const cell_map& cells() const { return cells_; }

    Rational cell(int a, int b, int c) const {
        auto it = cells_.find({a, b, c});
        return it == cells_.end() ? Rational(0) : it->second;
    }

    void add_cell(int a, int b, int c, const Rational& v);

    bool operator==(const Trivariate& o) const { return cells_ == o.cells_; }
    std::optional<std::array<int, 3>> first_difference(const Trivariate& o) const;

  private:
    Window3 window_;
    cell_map cells_;
};

/// Left side of the Taylor/delta identity: delta((w+x)-z) expanded for
/// |w|>|x|, as a trivariate coefficient array on the window.
Trivariate taylor_delta_lhs(Window3 window);

/// Right side: sum over j of x^j/j! times the j-th w-derivative of
/// delta(z-w). drop_j (when set) omits one term; only used to demonstrate
/// that the comparison catches a mutation.
Trivariate taylor_delta_rhs(Window3 window, std::optional<unsigned> drop_j = std::nullopt);

struct TaylorDeltaResult {
    bool holds;
    Window3 window;
    std::optional<std::array<int, 3>> witness_cell;
    Rational lhs_value, rhs_value;
};

TaylorDeltaResult taylor_delta_check(Window3 window);

nlohmann::json window2_json(const Window2& w);

/// Report form of a scalar coefficient array: rationals as "num/den" strings.
nlohmann::json bivariate_json(const ScalarBivariate& d);

/// Report form of a state-valued array; cell states through the serializer.
template <class V, class Ser>
nlohmann::json bivariate_json(const Bivariate<V>& d, Ser&& state_json) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [pq, v] : d.cells())
        cells.push_back({{"p", pq.first}, {"q", pq.second}, {"value", state_json(v)}});
    return {{"window", d.window().to_json()}, {"cells", cells}};
}

}  // namespace falg

#endif
