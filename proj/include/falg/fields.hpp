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

#ifndef FALG_FIELDS_HPP
#define FALG_FIELDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "falg/distributions.hpp"
#include "falg/field.hpp"
#include "falg/fock.hpp"
#include "falg/report.hpp"

namespace falg {

/// Free-boson generator: alpha(z) = sum_n alpha_n z^{-n-1} with the
/// Heisenberg mode action; mode n annihilates every vector of degree < n.
Field<Monomial> alpha_field();

/// beta(z) = sum_{n>0} n^{-1} alpha_n z^{-n}; after re-indexing, mode m is
/// (m+1)^{-1} alpha_{m+1} for m >= 0 and zero for m < 0.
Field<Monomial> beta_field();

/// Serialization helpers shared by witnesses and reports.
template <class K>
struct StateFormat {
    std::function<std::string(const SparseVec<K>&)> render;
    std::function<nlohmann::json(const SparseVec<K>&)> to_json;
};

StateFormat<Monomial> fock_format();
nlohmann::json fock_state_json(const FockVector& v);
FockVector fock_state_from_json(const nlohmann::json& j);

/// The finite grid every windowed field check is quantified over: a set of
/// evaluation vectors, a symmetric mode window and a search cap.
template <class K>
struct TestGrid {
    std::vector<SparseVec<K>> vectors;
    int mode_window = 4;   // modes scanned from -mode_window upward
    int n_max = 8;         // weak-locality / associativity search cap
    int degree_cap = 6;    // provenance of `vectors`, carried into reports
    StateFormat<K> fmt;

    nlohmann::json window_json() const {
        return {{"degree", degree_cap},
                {"modes", {-mode_window, mode_window}},
                {"n_max", n_max},
                {"vectors", vectors.size()}};
    }
};

TestGrid<Monomial> fock_grid(int degree_cap, int mode_window, int n_max = 8);

/// First (mode, vector) where f fails to vanish on the grid. Modes run from
/// -mode_window up to the field's own annihilation bound on each vector, so
/// everything above the scanned range is zero by the bound contract.
template <class K>
struct NonzeroWitness {
    int mode;
    SparseVec<K> vector;
    SparseVec<K> result;
};

template <class K>
std::optional<NonzeroWitness<K>> field_nonzero_witness(const Field<K>& f,
                                                       const TestGrid<K>& grid) {
    for (const auto& v : grid.vectors) {
        int hi = std::max(grid.mode_window, f.ann_bound(v));
        for (int m = -grid.mode_window; m <= hi; ++m) {
            SparseVec<K> r = f.mode(m, v);
            if (!r.is_zero()) return NonzeroWitness<K>{m, v, r};
        }
    }
    return std::nullopt;
}

template <class K>
std::optional<NonzeroWitness<K>> fields_difference_witness(const Field<K>& f,
                                                           const Field<K>& g,
                                                           const TestGrid<K>& grid) {
    for (const auto& v : grid.vectors) {
        int hi = std::max({grid.mode_window, f.ann_bound(v), g.ann_bound(v)});
        for (int m = -grid.mode_window; m <= hi; ++m) {
            SparseVec<K> d = f.mode(m, v) - g.mode(m, v);
            if (!d.is_zero()) return NonzeroWitness<K>{m, v, d};
        }
    }
    return std::nullopt;
}

template <class K>
nlohmann::json witness_json(const std::string& check, const std::string& field_a,
                            const std::string& field_b, int n,
                            const NonzeroWitness<K>& w, const StateFormat<K>& fmt) {
    nlohmann::json j;
    j["check"] = check;
    j["field_a"] = field_a;
    j["field_b"] = field_b;
    j["n"] = n;
    j["mode"] = w.mode;
    j["vector"] = fmt.to_json(w.vector);
    j["result"] = fmt.to_json(w.result);
    return j;
}

/// Least N <= n_max such that a_(n)b vanishes on the grid for every
/// N <= n <= n_max. No such N leaves `bound` empty and fills the witness.
template <class K>
struct WeakLocality {
    std::optional<int> bound;
    int failing_n = 0;
    std::optional<NonzeroWitness<K>> witness;
};

template <class K>
WeakLocality<K> weak_locality_search(const Field<K>& a, const Field<K>& b,
                                     const TestGrid<K>& grid) {
    WeakLocality<K> out;
    int last_bad = -1;  // largest n in [0, n_max] whose product does not vanish
    for (int n = grid.n_max; n >= 0; --n) {
        auto w = field_nonzero_witness(nth_product(a, b, n), grid);
        if (w) {
            last_bad = n;
            out.failing_n = n;
            out.witness = w;  // documents why the bound is not smaller
            break;
        }
    }
    if (last_bad == grid.n_max) return out;  // nonzero even at the cap: no bound found
    out.bound = last_bad + 1;
    return out;
}

template <class K>
CheckReport weak_locality_report(const std::string& name, const Field<K>& a,
                                 const Field<K>& b, const TestGrid<K>& grid) {
    WeakLocality<K> wl = weak_locality_search(a, b, grid);
    nlohmann::json params{{"field_a", a.label()}, {"field_b", b.label()}};
    if (wl.bound) {
        params["bound"] = *wl.bound;
        return CheckReport::pass(name, params, grid.window_json());
    }
    return CheckReport::fail(
        name, params, grid.window_json(),
        witness_json("weak-locality", a.label(), b.label(), wl.failing_n, *wl.witness,
                     grid.fmt));
}

/// Skewsymmetry residual R = a_(n)b + sign * p(a,b) *
/// sum_{j>=0} (-1)^{n+j} d^{(j)}(b_(n+j)a). The j-sum stops at the weak
/// locality bound of (b, a); callers must have established that bound.
template <class K>
Field<K> skewsymmetry_residual_field(const Field<K>& a, const Field<K>& b, int n,
                                     int bound_ba, int sign) {
    Field<K> r = nth_product(a, b, n);
    Rational outer = koszul_sign(a.parity(), b.parity());
    if (sign < 0) outer = -outer;
    for (int j = 0; n + j < bound_ba; ++j) {
        Field<K> term = divided_derivative(nth_product(b, a, n + j),
                                           static_cast<unsigned>(j));
        Rational c = outer;
        if (neg_one_pow(n + j) < 0) c = -c;
        r = field_sum(r, field_scale(c, term));
    }
    return Field<K>("skew-residual(" + a.label() + "," + b.label() + "," +
                        std::to_string(n) + ")",
                    r.parity(),
                    [r](int m, const SparseVec<K>& v) { return r.mode(m, v); },
                    [r](const SparseVec<K>& v) { return r.ann_bound(v); });
}

/// Fixes the sign convention of the residual operationally: the unique sign
/// making R identically zero on the grid for a known-local pair, over all n
/// in [n_lo, n_hi]. Empty optional if neither or both signs work.
template <class K>
std::optional<int> calibrate_skew_sign(const Field<K>& a, const Field<K>& b,
                                       const TestGrid<K>& grid, int n_lo, int n_hi) {
    WeakLocality<K> ba = weak_locality_search(b, a, grid);
    if (!ba.bound) return std::nullopt;
    bool plus_ok = true, minus_ok = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (plus_ok &&
            field_nonzero_witness(skewsymmetry_residual_field(a, b, n, *ba.bound, +1), grid))
            plus_ok = false;
        if (minus_ok &&
            field_nonzero_witness(skewsymmetry_residual_field(a, b, n, *ba.bound, -1), grid))
            minus_ok = false;
    }
    if (plus_ok == minus_ok) return std::nullopt;
    return plus_ok ? +1 : -1;
}

/// Whether R = 0 for the pair at the given n. Missing weak-locality bound
/// for (b, a) makes the finiteness of the j-sum uncertifiable.
template <class K>
CheckReport skewsymmetry_residual_check(const std::string& name, const Field<K>& a,
                                        const Field<K>& b, int n, int sign,
                                        const TestGrid<K>& grid) {
    WeakLocality<K> ba = weak_locality_search(b, a, grid);
    nlohmann::json params{
        {"field_a", a.label()}, {"field_b", b.label()}, {"n", n}, {"sign", sign}};
    if (!ba.bound)
        return CheckReport::not_applicable(
            name, params, "no weak-locality bound for the reversed pair; j-sum not finite");
    params["bound_ba"] = *ba.bound;
    Field<K> r = skewsymmetry_residual_field(a, b, n, *ba.bound, sign);
    auto w = field_nonzero_witness(r, grid);
    if (!w) return CheckReport::pass(name, params, grid.window_json());
    return CheckReport::fail(name, params, grid.window_json(),
                             witness_json("skewsymmetry", a.label(), b.label(), n, *w,
                                          grid.fmt));
}

/// Commutator coefficients on a fixed vector: cell (p, q) =
/// (a_(-p-1) b_(-q-1) - p(a,b) b_(-q-1) a_(-p-1))(v).
template <class K>
Bivariate<SparseVec<K>> commutator_coefficients(const Field<K>& a, const Field<K>& b,
                                                const SparseVec<K>& v, Window2 window) {
    Rational sign = koszul_sign(a.parity(), b.parity());
    Bivariate<SparseVec<K>> out(window);
    for (int p = window.z.lo; p <= window.z.hi; ++p) {
        for (int q = window.w.lo; q <= window.w.hi; ++q) {
            SparseVec<K> fwd = a.mode(-p - 1, b.mode(-q - 1, v));
            SparseVec<K> bwd = b.mode(-q - 1, a.mode(-p - 1, v));
            bwd *= sign;
            SparseVec<K> cell = fwd - bwd;
            if (!cell.is_zero()) out.set_cell(p, q, std::move(cell));
        }
    }
    return out;
}

/// Weak analog of Dong's lemma: with every ordered pair among (a, b, c)
/// weakly local, each product a_(k)b must again be weakly local against c in
/// both orders. Hypothesis failure is reported as inapplicable.
template <class K>
CheckReport dong_weak_check(const std::string& name, const Field<K>& a, const Field<K>& b,
                            const Field<K>& c, const std::vector<int>& products,
                            const TestGrid<K>& grid) {
    nlohmann::json params{{"field_a", a.label()},
                          {"field_b", b.label()},
                          {"field_c", c.label()},
                          {"products", products}};
    const Field<K>* fields[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (!weak_locality_search(*fields[i], *fields[j], grid).bound)
                return CheckReport::not_applicable(
                    name, params,
                    "hypothesis failed: pair (" + fields[i]->label() + ", " +
                        fields[j]->label() + ") not weakly local on the grid");
        }
    }
    nlohmann::json bounds = nlohmann::json::array();
    for (int k : products) {
        Field<K> prod = nth_product(a, b, k);
        WeakLocality<K> fwd = weak_locality_search(prod, c, grid);
        WeakLocality<K> bwd = weak_locality_search(c, prod, grid);
        if (!fwd.bound)
            return CheckReport::fail(name, params, grid.window_json(),
                                     witness_json("dong", prod.label(), c.label(),
                                                  fwd.failing_n, *fwd.witness, grid.fmt));
        if (!bwd.bound)
            return CheckReport::fail(name, params, grid.window_json(),
                                     witness_json("dong", c.label(), prod.label(),
                                                  bwd.failing_n, *bwd.witness, grid.fmt));
        bounds.push_back({{"k", k}, {"bound_prod_c", *fwd.bound}, {"bound_c_prod", *bwd.bound}});
    }
    params["bounds"] = bounds;
    return CheckReport::pass(name, params, grid.window_json());
}

}  // namespace falg

#endif
