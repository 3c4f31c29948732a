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

#ifndef FALG_FIELD_HPP
#define FALG_FIELD_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "falg/parity.hpp"
#include "falg/rational.hpp"
#include "falg/sparse_vec.hpp"

namespace falg {

/// A field as a family of mode operators n -> a_(n) acting on state vectors,
/// together with a per-vector annihilation bound: mode(n, v) = 0 for every
/// n >= ann_bound(v). Fields are represented behaviorally; mode results are
/// memoized per (n, basis key), relying on linearity of every mode.
///
/// Runs are single-threaded; the memo caches are not synchronized.
template <class K>
class Field {
  public:
    using S = SparseVec<K>;
    using ModeFn = std::function<S(int, const S&)>;    // invoked on unit vectors only
    using BoundFn = std::function<int(const S&)>;      // invoked on unit vectors only

    Field() : Field("0", Parity::even, [](int, const S&) { return S(); },
                    [](const S&) { return 0; }) {}

    Field(std::string label, Parity parity, ModeFn mode, BoundFn bound)
        : impl_(std::make_shared<Impl>(
              Impl{std::move(label), parity, std::move(mode), std::move(bound), {}, {}})) {}

    const std::string& label() const { return impl_->label; }
    Parity parity() const { return impl_->parity; }

    S mode(int n, const S& v) const {
        S out;
        for (const auto& [key, c] : v.terms()) {
            const S& base = mode_on_key(n, key);
            if (base.is_zero()) continue;
            S scaled = base;
            scaled *= c;
            out += scaled;
        }
        return out;
    }

    int ann_bound(const S& v) const {
        int bound = 0;
        bool any = false;
        for (const auto& [key, c] : v.terms()) {
            int b = bound_on_key(key);
            bound = any ? std::max(bound, b) : b;
            any = true;
        }
        return any ? bound : 0;
    }

    /// Identity of the underlying implementation (shared across copies).
    bool same_as(const Field& o) const { return impl_ == o.impl_; }

  private:
    struct Impl {
        std::string label;
        Parity parity;
        ModeFn mode;
        BoundFn bound;
        std::map<std::pair<int, K>, S> mode_cache;
        std::map<K, int> bound_cache;
    };

    const S& mode_on_key(int n, const K& key) const {
        auto it = impl_->mode_cache.find({n, key});
        if (it != impl_->mode_cache.end()) return it->second;
        S value = impl_->mode(n, S::unit(key));
        return impl_->mode_cache.emplace(std::make_pair(n, key), std::move(value))
            .first->second;
    }

    int bound_on_key(const K& key) const {
        auto it = impl_->bound_cache.find(key);
        if (it != impl_->bound_cache.end()) return it->second;
        int value = impl_->bound(S::unit(key));
        impl_->bound_cache.emplace(key, value);
        return value;
    }

    std::shared_ptr<Impl> impl_;
};

template <class K>
Field<K> zero_field() {
    return Field<K>();
}

/// The constant field with a single mode: mode(-1) = Id.
template <class K>
Field<K> identity_field() {
    using S = SparseVec<K>;
    return Field<K>(
        "I", Parity::even, [](int n, const S& v) { return n == -1 ? v : S(); },
        [](const S&) { return 0; });
}

template <class K>
Field<K> field_scale(const Rational& c, const Field<K>& f, std::string label = "") {
    using S = SparseVec<K>;
    if (label.empty()) label = c.to_string() + "*" + f.label();
    return Field<K>(
        std::move(label), f.parity(),
        [c, f](int n, const S& v) {
            S out = f.mode(n, v);
            out *= c;
            return out;
        },
        [f](const S& v) { return f.ann_bound(v); });
}

template <class K>
Field<K> field_sum(const Field<K>& a, const Field<K>& b, std::string label = "") {
    using S = SparseVec<K>;
    if (label.empty()) label = a.label() + "+" + b.label();
    return Field<K>(
        std::move(label), a.parity(),
        [a, b](int n, const S& v) { return a.mode(n, v) + b.mode(n, v); },
        [a, b](const S& v) { return std::max(a.ann_bound(v), b.ann_bound(v)); });
}

/// Rational linear combination of fields; parities must agree for the Koszul
/// sign to stay meaningful (all shipped fields are even).
template <class K>
Field<K> field_combination(std::vector<std::pair<Rational, Field<K>>> pieces,
                           std::string label) {
    using S = SparseVec<K>;
    Parity parity = pieces.empty() ? Parity::even : pieces.front().second.parity();
    return Field<K>(
        std::move(label), parity,
        [pieces](int n, const S& v) {
            S out;
            for (const auto& [c, f] : pieces) {
                S term = f.mode(n, v);
                term *= c;
                out += term;
            }
            return out;
        },
        [pieces](const S& v) {
            int bound = 0;
            for (const auto& [c, f] : pieces) bound = std::max(bound, f.ann_bound(v));
            return bound;
        });
}

/// d a(z)/dz: mode n is -n * a_(n-1); the annihilation bound rises by one.
template <class K>
Field<K> derivative(const Field<K>& a) {
    using S = SparseVec<K>;
    return Field<K>(
        "d(" + a.label() + ")", a.parity(),
        [a](int n, const S& v) {
            if (n == 0) return S();
            S out = a.mode(n - 1, v);
            out *= Rational(-n);
            return out;
        },
        [a](const S& v) { return a.ann_bound(v) + 1; });
}

/// j-fold derivative divided by j!.
template <class K>
Field<K> divided_derivative(const Field<K>& a, unsigned j) {
    if (j == 0) return a;
    Field<K> d = a;
    for (unsigned i = 0; i < j; ++i) d = derivative(d);
    return field_scale(Rational(BigInt(1), factorial(j)), d,
                       "d^(" + std::to_string(j) + ")(" + a.label() + ")");
}

/// Normally ordered product :a b: — creation modes of a to the left,
/// annihilation modes to the right with the Koszul sign. Both sums are
/// finite through the annihilation bounds.
template <class K>
Field<K> normal_ordered(const Field<K>& a, const Field<K>& b) {
    using S = SparseVec<K>;
    Rational sign = koszul_sign(a.parity(), b.parity());
    return Field<K>(
        ":" + a.label() + " " + b.label() + ":", parity_product(a.parity(), b.parity()),
        [a, b, sign](int m, const S& v) {
            S out;
            // creation part: sum_{n<0} a_(n) b_(m-n-1), stops once b's mode
            // index reaches its bound on v
            int b_bound = b.ann_bound(v);
            for (int n = -1; m - n - 1 < b_bound; --n) {
                S bi = b.mode(m - n - 1, v);
                if (bi.is_zero()) continue;
                out += a.mode(n, bi);
            }
            // annihilation part: p(a,b) sum_{n>=0} b_(m-n-1) a_(n)
            int a_bound = a.ann_bound(v);
            for (int n = 0; n < a_bound; ++n) {
                S ai = a.mode(n, v);
                if (ai.is_zero()) continue;
                S term = b.mode(m - n - 1, ai);
                term *= sign;
                out += term;
            }
            return out;
        },
        [a, b](const S& v) {
            int bound = b.ann_bound(v);
            int a_bound = a.ann_bound(v);
            for (int n = 0; n < a_bound; ++n) {
                S ai = a.mode(n, v);
                if (ai.is_zero()) continue;
                bound = std::max(bound, b.ann_bound(ai) + n + 1);
            }
            return std::max(bound, 0);
        });
}

/// n-th product of fields a(w)_(n) b(w).
///
/// For n >= 0 this is the residue of (z-w)^n against the supercommutator,
/// in mode form: mode m = sum_{j=0}^{n} (-1)^j C(n,j) [a_(n-j), b_(m+j)].
/// For n < 0 it reduces to the normally ordered product with the divided
/// derivative: :(d^{(-n-1)} a) b:.
template <class K>
Field<K> nth_product(const Field<K>& a, const Field<K>& b, int n) {
    using S = SparseVec<K>;
    if (n < 0) {
        Field<K> na = normal_ordered(divided_derivative(a, static_cast<unsigned>(-n - 1)), b);
        return Field<K>(
            a.label() + "_(" + std::to_string(n) + ")" + b.label(), na.parity(),
            [na](int m, const S& v) { return na.mode(m, v); },
            [na](const S& v) { return na.ann_bound(v); });
    }
    Rational sign = koszul_sign(a.parity(), b.parity());
    std::vector<Rational> weights;
    for (int j = 0; j <= n; ++j) {
        Rational w = binomial(n, static_cast<unsigned>(j));
        if (neg_one_pow(j) < 0) w = -w;
        weights.push_back(w);
    }
    return Field<K>(
        a.label() + "_(" + std::to_string(n) + ")" + b.label(),
        parity_product(a.parity(), b.parity()),
        [a, b, n, sign, weights](int m, const S& v) {
            S out;
            for (int j = 0; j <= n; ++j) {
                S bv = b.mode(m + j, v);
                S fwd = bv.is_zero() ? S() : a.mode(n - j, bv);
                S av = a.mode(n - j, v);
                S bwd = av.is_zero() ? S() : b.mode(m + j, av);
                bwd *= sign;
                S comm = fwd - bwd;
                comm *= weights[static_cast<std::size_t>(j)];
                out += comm;
            }
            return out;
        },
        [a, b, n](const S& v) {
            int bound = b.ann_bound(v);
            for (int j = 0; j <= n; ++j) {
                S av = a.mode(n - j, v);
                if (av.is_zero()) continue;
                bound = std::max(bound, b.ann_bound(av) - j);
            }
            return std::max(bound, 0);
        });
}

}  // namespace falg

#endif
