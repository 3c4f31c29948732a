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

#ifndef FALG_FOCK_HPP
#define FALG_FOCK_HPP

#include <compare>
#include <string>
#include <vector>

#include "falg/parity.hpp"
#include "falg/sparse_vec.hpp"

namespace falg {

/// Basis monomial of the free-boson Fock space: a multiset of positive
/// integers, part n standing for one factor x_n (one oscillator excitation
/// of mode -n on the vacuum). Parts are stored sorted descending; the empty
/// multiset is the vacuum.
struct Monomial {
    std::vector<int> parts;

    Monomial() = default;
    explicit Monomial(std::vector<int> p);

    bool is_vacuum() const { return parts.empty(); }
    int degree() const;
    int multiplicity(int part) const;

    auto operator<=>(const Monomial&) const = default;

    std::string render() const;  // "x1^2 x3", vacuum as "|0>"
};

using FockVector = SparseVec<Monomial>;

FockVector fock_vacuum();
FockVector fock_state(std::vector<int> parts);  // unit coefficient

/// Heisenberg mode action: n < 0 multiplies by x_{-n}, n > 0 acts as
/// n * d/dx_n, n = 0 acts as zero. Satisfies [a_m, a_n] = m delta_{m,-n}.
FockVector alpha_mode(int n, const FockVector& v);

/// Translation operator: kills the vacuum and raises each factor x_n to
/// x_{n+1} with weight n (Leibniz over factors). Degree-homogeneous of
/// degree +1.
FockVector fock_translate(const FockVector& v);

/// All partitions of weights 0..d, graded by weight and within a weight in
/// reverse lexicographic order ({2} before {1,1}).
std::vector<Monomial> partitions_up_to(int d);

int fock_degree(const FockVector& v);  // max monomial degree, 0 for zero vector
std::string render_fock(const FockVector& v);

/// The state model the free-boson fields act on.
class FockModel {
  public:
    using Key = Monomial;

    FockVector vacuum() const { return fock_vacuum(); }
    FockVector translate(const FockVector& v) const { return fock_translate(v); }
    std::vector<FockVector> basis_up_to(int d) const;
    int degree(const FockVector& v) const { return fock_degree(v); }
    Parity parity_of(const FockVector&) const { return Parity::even; }
    std::string render(const FockVector& v) const { return render_fock(v); }
};

}  // namespace falg

#endif
