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

#ifndef FALG_VERIFY_HPP
#define FALG_VERIFY_HPP

#include <array>
#include <cstdint>
#include <random>

#include "falg/field_algebra.hpp"

namespace falg {

/// Everything the axiom battery is quantified over. `sources` are the
/// states whose fields get exercised; `triples` feed the two bivariate
/// identities; evaluation vectors and mode windows sit in `grid`.
template <class K>
struct BatteryGrid {
    std::vector<SparseVec<K>> sources;
    std::vector<SparseVec<K>> product_sources;  // pairs for the n-th product axiom
    std::vector<std::array<SparseVec<K>, 3>> triples;
    TestGrid<K> grid;
    int n_lo = -3, n_hi = 4;
    int exp_window = 5;
    int depth = 3;

    nlohmann::json window_json() const {
        nlohmann::json j = grid.window_json();
        j["sources"] = sources.size();
        j["product_sources"] = product_sources.size();
        j["triples"] = triples.size();
        j["exp_window"] = exp_window;
        j["depth"] = depth;
        return j;
    }
};

// ---------------------------------------------------------------------------
// bivariate identity assemblies
//
// Exponent bookkeeping: mode m of the w-side field sits at w^{-m-1} and the
// substitution w -> -w twists the coefficient at exponent e by (-1)^e.
// Every cell below is a finite exact sum through the annihilation bounds.

/// Y(Y(a,z)b, -w)c as a coefficient array on the window.
template <class K>
Bivariate<SparseVec<K>> composed_side(const Algebra<K>& alg, const SparseVec<K>& a,
                                      const SparseVec<K>& b, const SparseVec<K>& c,
                                      Window2 win) {
    Bivariate<SparseVec<K>> out(win);
    Field<K> fa = alg.field_of(a);
    int p_lo = std::max(win.z.lo, -fa.ann_bound(b));
    for (int p = p_lo; p <= win.z.hi; ++p) {
        SparseVec<K> u = fa.mode(-p - 1, b);
        if (u.is_zero()) continue;
        Field<K> fu = alg.field_of(u);
        for (int q = win.w.lo; q <= win.w.hi; ++q) {
            SparseVec<K> cell = fu.mode(-q - 1, c);
            if (neg_one_pow(q) < 0) cell *= Rational(-1);
            if (!cell.is_zero()) out.set_cell(p, q, std::move(cell));
        }
    }
    return out;
}

/// Y(a, z-w) Y(b, -w) c with z-w expanded in the |z|>|w| domain.
template <class K>
Bivariate<SparseVec<K>> expanded_side(const Algebra<K>& alg, const SparseVec<K>& a,
                                      const SparseVec<K>& b, const SparseVec<K>& c,
                                      Window2 win) {
    Bivariate<SparseVec<K>> out(win);
    Field<K> fa = alg.field_of(a);
    Field<K> fb = alg.field_of(b);
    int b_bound = fb.ann_bound(c);
    for (int p = win.z.lo; p <= win.z.hi; ++p) {
        for (int q = win.w.lo; q <= win.w.hi; ++q) {
            SparseVec<K> acc;
            for (int k = 0; q - k >= -b_bound; ++k) {
                Rational coeff = izw_coeff(p + k, k);
                if (coeff.is_zero()) continue;
                SparseVec<K> s = fb.mode(-(q - k) - 1, c);
                if (s.is_zero()) continue;
                if (neg_one_pow(q - k) < 0) s *= Rational(-1);
                SparseVec<K> term = fa.mode(-p - k - 1, s);
                term *= coeff;
                acc += term;
            }
            if (!acc.is_zero()) out.set_cell(p, q, std::move(acc));
        }
    }
    return out;
}

/// p(a,b) Y(b,-w) sum_j d^j_w delta(z-w) Res_x x^(j) Y(a,x)c. The x-residue
/// is a_(j)c / j!, so the j-sum stops at the annihilation bound of a's field
/// on c; for holomorphic algebras it vanishes identically.
template <class K>
Bivariate<SparseVec<K>> correction_term(const Algebra<K>& alg, const SparseVec<K>& a,
                                        const SparseVec<K>& b, const SparseVec<K>& c,
                                        Window2 win) {
    Bivariate<SparseVec<K>> out(win);
    Field<K> fa = alg.field_of(a);
    Field<K> fb = alg.field_of(b);
    int j_cap = fa.ann_bound(c);
    std::vector<SparseVec<K>> residues;  // a_(j) c / j!
    for (int j = 0; j < j_cap; ++j) {
        SparseVec<K> s = fa.mode(j, c);
        s *= Rational(BigInt(1), factorial(static_cast<unsigned>(j)));
        residues.push_back(std::move(s));
    }
    for (int p = win.z.lo; p <= win.z.hi; ++p) {
        for (int q = win.w.lo; q <= win.w.hi; ++q) {
            SparseVec<K> acc;
            for (int j = 0; j < j_cap; ++j) {
                if (residues[static_cast<std::size_t>(j)].is_zero()) continue;
                Rational delta(falling_factorial(-p - 1, static_cast<unsigned>(j)), BigInt(1));
                if (delta.is_zero()) continue;
                int q2 = q + p + 1 + j;
                SparseVec<K> term =
                    fb.mode(-q2 - 1, residues[static_cast<std::size_t>(j)]);
                if (term.is_zero()) continue;
                if (neg_one_pow(q2) < 0) term *= Rational(-1);
                term *= delta;
                acc += term;
            }
            if (!acc.is_zero()) out.set_cell(p, q, std::move(acc));
        }
    }
    return out;
}

namespace detail {

template <class K>
nlohmann::json cell_witness(const std::string& check, const Algebra<K>& alg,
                            const SparseVec<K>& a, const SparseVec<K>& b,
                            const SparseVec<K>& c, std::pair<int, int> cell,
                            const SparseVec<K>& lhs, const SparseVec<K>& rhs) {
    return nlohmann::json{{"check", check},
                          {"a", alg.fmt.render(a)},
                          {"b", alg.fmt.render(b)},
                          {"c", alg.fmt.render(c)},
                          {"cell", {cell.first, cell.second}},
                          {"lhs", alg.fmt.to_json(lhs)},
                          {"rhs", alg.fmt.to_json(rhs)}};
}

/// (z-w)^N times a coefficient array, evaluated on `win` from an array
/// padded below by N in both variables.
template <class K>
Bivariate<SparseVec<K>> power_multiplied(const Bivariate<SparseVec<K>>& padded, int N,
                                         Window2 win) {
    Bivariate<SparseVec<K>> out(win);
    for (int p = win.z.lo; p <= win.z.hi; ++p) {
        for (int q = win.w.lo; q <= win.w.hi; ++q) {
            SparseVec<K> acc;
            for (int k = 0; k <= N; ++k) {
                Rational coeff = binomial(N, static_cast<unsigned>(k));
                if (neg_one_pow(k) < 0) coeff = -coeff;
                SparseVec<K> term = padded.cell(p - N + k, q - k);
                term *= coeff;
                acc += term;
            }
            if (!acc.is_zero()) out.set_cell(p, q, std::move(acc));
        }
    }
    return out;
}

}  // namespace detail

/// The n-th product axiom in its domain-expanded form: the composed side
/// equals the expanded side minus the delta-supported correction, cell by
/// cell on the window. Reports whether the correction was nonzero.
template <class K>
CheckReport check_expansion_identity(const Algebra<K>& alg, const SparseVec<K>& a,
                                     const SparseVec<K>& b, const SparseVec<K>& c,
                                     Window2 win) {
    nlohmann::json params{{"a", alg.fmt.render(a)},
                          {"b", alg.fmt.render(b)},
                          {"c", alg.fmt.render(c)}};
    auto lhs = composed_side(alg, a, b, c, win);
    auto rhs = expanded_side(alg, a, b, c, win);
    auto corr = correction_term(alg, a, b, c, win);
    params["correction_nonzero"] = !corr.is_zero();
    rhs -= corr;
    auto diff = lhs.first_difference(rhs);
    if (!diff)
        return CheckReport::pass("expansion-identity", params, win.to_json());
    return CheckReport::fail("expansion-identity", params, win.to_json(),
                             detail::cell_witness("expansion-identity", alg, a, b, c, *diff,
                                                  lhs.cell(diff->first, diff->second),
                                                  rhs.cell(diff->first, diff->second)));
}

/// Associativity: least N <= N_max with (z-w)^N times both raw sides equal
/// on the window.
template <class K>
CheckReport check_associativity(const Algebra<K>& alg, const SparseVec<K>& a,
                                const SparseVec<K>& b, const SparseVec<K>& c, int N_max,
                                Window2 win) {
    nlohmann::json params{{"a", alg.fmt.render(a)},
                          {"b", alg.fmt.render(b)},
                          {"c", alg.fmt.render(c)},
                          {"N_max", N_max}};
    Window2 padded{ExpRange(win.z.lo - N_max, win.z.hi), ExpRange(win.w.lo - N_max, win.w.hi)};
    auto lhs = composed_side(alg, a, b, c, padded);
    auto rhs = expanded_side(alg, a, b, c, padded);
    for (int N = 0; N <= N_max; ++N) {
        auto l = detail::power_multiplied(lhs, N, win);
        auto r = detail::power_multiplied(rhs, N, win);
        if (!l.first_difference(r)) {
            params["N"] = N;
            return CheckReport::pass("associativity", params, win.to_json());
        }
    }
    auto l = detail::power_multiplied(lhs, N_max, win);
    auto r = detail::power_multiplied(rhs, N_max, win);
    auto diff = *l.first_difference(r);
    return CheckReport::fail("associativity", params, win.to_json(),
                             detail::cell_witness("associativity", alg, a, b, c, diff,
                                                  l.cell(diff.first, diff.second),
                                                  r.cell(diff.first, diff.second)));
}

/// Both vacuum consequences: fields evaluated on the vacuum at z = 0 give
/// back their state, and the vacuum's field is the identity.
template <class K>
CheckReport check_vacuum(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    Field<K> yvac = alg.field_of(alg.vacuum);
    auto id = identity_field<K>();
    if (auto w = fields_difference_witness(yvac, id, bg.grid))
        return CheckReport::fail(
            "vacuum", params, bg.window_json(),
            witness_json("vacuum", yvac.label(), "I", w->mode, *w, bg.grid.fmt));
    for (const auto& a : bg.sources) {
        Field<K> fa = alg.field_of(a);
        SparseVec<K> created = fa.mode(-1, alg.vacuum);
        if (!(created == a))
            return CheckReport::fail(
                "vacuum", params, bg.window_json(),
                witness_json("vacuum", fa.label(), "created-state", -1,
                             NonzeroWitness<K>{-1, alg.vacuum, created - a}, bg.grid.fmt));
        int hi = fa.ann_bound(alg.vacuum) + bg.grid.mode_window;
        for (int n = 0; n <= hi; ++n) {
            SparseVec<K> r = fa.mode(n, alg.vacuum);
            if (!r.is_zero())
                return CheckReport::fail(
                    "vacuum", params, bg.window_json(),
                    witness_json("vacuum", fa.label(), "z=0-evaluation", n,
                                 NonzeroWitness<K>{n, alg.vacuum, r}, bg.grid.fmt));
        }
    }
    return CheckReport::pass("vacuum", params, bg.window_json());
}

/// The partial vacuum axiom: Y(|0>) = I and a_(-1)|0> = a.
template <class K>
CheckReport check_partial_vacuum(const Algebra<K>& alg, const BatteryGrid<K>& bg,
                                 std::string name = "partial-vacuum") {
    nlohmann::json params{{"algebra", alg.id}};
    Field<K> yvac = alg.field_of(alg.vacuum);
    auto id = identity_field<K>();
    if (auto w = fields_difference_witness(yvac, id, bg.grid))
        return CheckReport::fail(name, params, bg.window_json(),
                                 witness_json(name, yvac.label(), "I", w->mode, *w,
                                              bg.grid.fmt));
    for (const auto& a : bg.sources) {
        Field<K> fa = alg.field_of(a);
        SparseVec<K> created = fa.mode(-1, alg.vacuum);
        if (!(created == a))
            return CheckReport::fail(
                name, params, bg.window_json(),
                witness_json(name, fa.label(), "created-state", -1,
                             NonzeroWitness<K>{-1, alg.vacuum, created - a}, bg.grid.fmt));
    }
    return CheckReport::pass(name, params, bg.window_json());
}

/// Translation covariance, both equalities modewise: the field of Ta is the
/// derivative field, and equals the commutator with T.
template <class K>
CheckReport check_translation(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    for (const auto& a : bg.sources) {
        Field<K> fa = alg.field_of(a);
        Field<K> fta = alg.field_of(alg.translate(a));
        for (const auto& v : bg.grid.vectors) {
            int hi = std::max({bg.grid.mode_window, fa.ann_bound(v) + 1, fta.ann_bound(v)});
            for (int n = -bg.grid.mode_window; n <= hi; ++n) {
                SparseVec<K> lhs = fta.mode(n, v);
                SparseVec<K> derivative_route = fa.mode(n - 1, v);
                derivative_route *= Rational(-n);
                if (!(lhs == derivative_route))
                    return CheckReport::fail(
                        "translation", params, bg.window_json(),
                        witness_json("translation", fta.label(), "derivative", n,
                                     NonzeroWitness<K>{n, v, lhs - derivative_route},
                                     bg.grid.fmt));
                SparseVec<K> commutator_route =
                    alg.translate(fa.mode(n, v)) - fa.mode(n, alg.translate(v));
                if (!(lhs == commutator_route))
                    return CheckReport::fail(
                        "translation", params, bg.window_json(),
                        witness_json("translation", fta.label(), "[T,-]", n,
                                     NonzeroWitness<K>{n, v, lhs - commutator_route},
                                     bg.grid.fmt));
            }
        }
    }
    return CheckReport::pass("translation", params, bg.window_json());
}

/// The n-th product axiom: Y(a_(n)b) = Y(a)_(n) Y(b) on the grid for every
/// source pair and every n in the range.
template <class K>
CheckReport check_nth_product_axiom(const Algebra<K>& alg, const BatteryGrid<K>& bg,
                                    std::string name = "nth-product") {
    nlohmann::json params{{"algebra", alg.id}, {"n", {bg.n_lo, bg.n_hi}}};
    for (const auto& a : bg.product_sources) {
        Field<K> fa = alg.field_of(a);
        for (const auto& b : bg.product_sources) {
            Field<K> fb = alg.field_of(b);
            for (int n = bg.n_lo; n <= bg.n_hi; ++n) {
                Field<K> lhs = alg.field_of(fa.mode(n, b));
                Field<K> rhs = nth_product(fa, fb, n);
                if (auto w = fields_difference_witness(lhs, rhs, bg.grid))
                    return CheckReport::fail(
                        name, params, bg.window_json(),
                        witness_json(name, fa.label() + "|" + fb.label(),
                                     "mode-product", n, *w, bg.grid.fmt));
            }
        }
    }
    return CheckReport::pass(name, params, bg.window_json());
}

/// Weak locality of every ordered source pair, with the found bounds.
template <class K>
CheckReport check_weak_locality(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    int max_bound = 0;
    for (const auto& a : bg.sources) {
        for (const auto& b : bg.sources) {
            WeakLocality<K> wl =
                weak_locality_search(alg.field_of(a), alg.field_of(b), bg.grid);
            if (!wl.bound)
                return CheckReport::fail(
                    "weak-locality", params, bg.window_json(),
                    witness_json("weak-locality", alg.fmt.render(a), alg.fmt.render(b),
                                 wl.failing_n, *wl.witness, bg.grid.fmt));
            max_bound = std::max(max_bound, *wl.bound);
        }
    }
    params["max_bound"] = max_bound;
    return CheckReport::pass("weak-locality", params, bg.window_json());
}

/// Full locality of every ordered source pair: some (z-w)^N kills the
/// commutator array on the window.
template <class K>
CheckReport check_locality(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    Window2 win = Window2::symmetric(bg.exp_window + bg.grid.n_max);
    int max_order = 0;
    for (const auto& a : bg.sources) {
        for (const auto& b : bg.sources) {
            for (const auto& v : bg.grid.vectors) {
                auto comm =
                    commutator_coefficients(alg.field_of(a), alg.field_of(b), v, win);
                bool killed = false;
                for (int N = 0; N <= bg.grid.n_max && !killed; ++N) {
                    auto prod = multiply_scalar(expand_power(N, ExpandIn::z, win), comm);
                    if (prod && prod->is_zero()) {
                        killed = true;
                        max_order = std::max(max_order, N);
                    }
                }
                if (!killed) {
                    auto prod =
                        multiply_scalar(expand_power(bg.grid.n_max, ExpandIn::z, win), comm);
                    auto cell = prod->cells().begin();
                    return CheckReport::fail(
                        "locality", params, bg.window_json(),
                        detail::cell_witness("locality", alg, a, b, v, cell->first,
                                             cell->second, SparseVec<K>()));
                }
            }
        }
    }
    params["max_order"] = max_order;
    return CheckReport::pass("locality", params, bg.window_json());
}

/// The checkable sesquilinearity surrogate: (Ta)_(n) b = -n a_(n-1) b for
/// 0 <= n <= W on the grid of source pairs.
template <class K>
CheckReport check_conformal_surrogate(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    for (const auto& a : bg.sources) {
        Field<K> fa = alg.field_of(a);
        Field<K> fta = alg.field_of(alg.translate(a));
        for (const auto& b : bg.sources) {
            for (int n = 0; n <= bg.grid.mode_window; ++n) {
                SparseVec<K> lhs = fta.mode(n, b);
                SparseVec<K> rhs = fa.mode(n - 1, b);
                rhs *= Rational(-n);
                if (!(lhs == rhs))
                    return CheckReport::fail(
                        "conformal-surrogate", params, bg.window_json(),
                        witness_json("conformal-surrogate", fta.label(), alg.fmt.render(b),
                                     n, NonzeroWitness<K>{n, b, lhs - rhs}, bg.grid.fmt));
            }
        }
    }
    return CheckReport::pass("conformal-surrogate", params, bg.window_json());
}

/// Whether the opposite fields coincide with the direct ones on the grid:
/// holds classifies the algebra as a vertex algebra at this window, a
/// failing witness classifies it as a strict field algebra.
template <class K>
CheckReport classify_skewsymmetry(const Algebra<K>& alg, const BatteryGrid<K>& bg) {
    nlohmann::json params{{"algebra", alg.id}};
    for (const auto& a : bg.sources) {
        Field<K> x = opposite_field(alg, a);
        Field<K> y = alg.field_of(a);
        if (auto w = fields_difference_witness(x, y, bg.grid)) {
            params["classification"] = "strict field algebra";
            return CheckReport::fail("skewsymmetry-classification", params, bg.window_json(),
                                     witness_json("skewsymmetry-classification", x.label(),
                                                  y.label(), w->mode, *w, bg.grid.fmt));
        }
    }
    params["classification"] = "vertex algebra";
    return CheckReport::pass("skewsymmetry-classification", params, bg.window_json());
}

/// The derived algebra of opposite fields must itself pass the partial
/// vacuum and n-th product axioms.
template <class K>
std::vector<CheckReport> check_opposite_algebra(const Algebra<K>& alg,
                                                const BatteryGrid<K>& bg) {
    Algebra<K> opp = opposite_view(alg);
    std::vector<CheckReport> out;
    out.push_back(check_partial_vacuum(opp, bg, "opposite-partial-vacuum"));
    out.push_back(check_nth_product_axiom(opp, bg, "opposite-nth-product"));
    return out;
}

/// Deterministic subsample of ordered triples from the given states.
template <class K>
std::vector<std::array<SparseVec<K>, 3>> sample_triples(
    const std::vector<SparseVec<K>>& states, std::size_t max_triples, std::uint64_t seed) {
    std::vector<std::array<SparseVec<K>, 3>> all;
    for (const auto& a : states)
        for (const auto& b : states)
            for (const auto& c : states) all.push_back({a, b, c});
    if (all.size() <= max_triples) return all;
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(max_triples);
    return all;
}

}  // namespace falg

#endif
