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

#ifndef FALG_SPARSE_VEC_HPP
#define FALG_SPARSE_VEC_HPP

#include <map>
#include <utility>

#include "falg/rational.hpp"

namespace falg {

/// Finite rational linear combination of basis keys, kept canonical:
/// no stored zero coefficients, keys ordered. Equality is map equality.
template <class Key>
class SparseVec {
  public:
    using terms_map = std::map<Key, Rational>;

    SparseVec() = default;

    static SparseVec unit(Key k) {
        SparseVec v;
        v.terms_.emplace(std::move(k), Rational(1));
        return v;
    }

    static SparseVec single(Key k, Rational c) {
        SparseVec v;
        if (!c.is_zero()) v.terms_.emplace(std::move(k), std::move(c));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    const terms_map& terms() const { return terms_; }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    SparseVec& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const Rational& s, SparseVec v) { return v *= s; }

    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }
    bool operator<(const SparseVec& o) const { return terms_ < o.terms_; }

  private:
    terms_map terms_;
};

}  // namespace falg

#endif
