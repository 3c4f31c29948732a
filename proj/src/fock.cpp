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

#include "falg/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace falg {

Monomial::Monomial(std::vector<int> p) : parts(std::move(p)) {
    for (int n : parts)
        if (n < 1) throw std::invalid_argument("Monomial: parts must be >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Monomial::degree() const {
    int d = 0;
    for (int n : parts) d += n;
    return d;
}

int Monomial::multiplicity(int part) const {
    int m = 0;
    for (int n : parts) m += (n == part) ? 1 : 0;
    return m;
}

std::string Monomial::render() const {
    if (parts.empty()) return "|0>";
    std::string out;
    // ascending variable order for display
    std::vector<int> asc(parts.rbegin(), parts.rend());
    for (std::size_t i = 0; i < asc.size();) {
        std::size_t j = i;
        while (j < asc.size() && asc[j] == asc[i]) ++j;
        if (!out.empty()) out += " ";
        out += "x" + std::to_string(asc[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

FockVector fock_vacuum() { return FockVector::unit(Monomial{}); }

FockVector fock_state(std::vector<int> parts) {
    return FockVector::unit(Monomial(std::move(parts)));
}

namespace {

Monomial with_part_added(const Monomial& m, int part) {
    std::vector<int> p = m.parts;
    p.push_back(part);
    return Monomial(std::move(p));
}

Monomial with_one_part_removed(const Monomial& m, int part) {
    std::vector<int> p;
    p.reserve(m.parts.size());
    bool removed = false;
    for (int n : m.parts) {
        if (!removed && n == part) {
            removed = true;
            continue;
        }
        p.push_back(n);
    }
    return Monomial(std::move(p));
}

}  // namespace

FockVector alpha_mode(int n, const FockVector& v) {
    FockVector out;
    if (n == 0) return out;
    for (const auto& [mono, c] : v.terms()) {
        if (n < 0) {
            out.add_term(with_part_added(mono, -n), c);
        } else {
            int mult = mono.multiplicity(n);
            if (mult == 0) continue;
            // n * d/dx_n on x_n^mult
            out.add_term(with_one_part_removed(mono, n),
                         c * Rational(static_cast<long long>(n) * mult));
        }
    }
    return out;
}

FockVector fock_translate(const FockVector& v) {
    FockVector out;
    for (const auto& [mono, c] : v.terms()) {
        // Leibniz over factors: each part n contributes weight n and moves to n+1
        std::vector<int> distinct;
        for (int n : mono.parts)
            if (distinct.empty() || distinct.back() != n) distinct.push_back(n);
        for (int n : distinct) {
            int mult = mono.multiplicity(n);
            Monomial moved = with_part_added(with_one_part_removed(mono, n), n + 1);
            out.add_term(moved, c * Rational(static_cast<long long>(n) * mult));
        }
    }
    return out;
}

namespace {

// partitions of exactly w with parts <= cap, reverse lexicographic
void partitions_of(int w, int cap, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (w == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(w, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(w - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> partitions_up_to(int d) {
    if (d < 0) throw std::invalid_argument("partitions_up_to: negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur;
    for (int w = 0; w <= d; ++w) partitions_of(w, w, cur, out);
    return out;
}

int fock_degree(const FockVector& v) {
    int d = 0;
    for (const auto& [mono, c] : v.terms()) d = std::max(d, mono.degree());
    return d;
}

std::string render_fock(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [mono, c] : v.terms()) {
        if (!out.empty()) out += " + ";
        if (c.is_one())
            out += mono.render();
        else
            out += c.to_string() + "*" + mono.render();
    }
    return out;
}

std::vector<FockVector> FockModel::basis_up_to(int d) const {
    std::vector<FockVector> out;
    for (const auto& m : partitions_up_to(d)) out.push_back(FockVector::unit(m));
    return out;
}

}  // namespace falg
