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

#ifndef FALG_ASSOC_ALGEBRA_HPP
#define FALG_ASSOC_ALGEBRA_HPP

#include <string>
#include <vector>

#include "falg/field_algebra.hpp"

namespace falg {

using MatVec = SparseVec<int>;

/// Finite-dimensional unital associative algebra over the rationals with a
/// derivation T killing the unit. Associativity, the unit laws and the
/// Leibniz rule are checked on all basis tuples at construction.
class AssocAlgebraModel {
  public:
    AssocAlgebraModel(std::vector<std::string> basis_names,
                      std::vector<std::vector<MatVec>> products, MatVec unit,
                      std::vector<MatVec> derivation_columns);

    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    MatVec unit() const { return unit_; }
    MatVec multiply(const MatVec& a, const MatVec& b) const;
    MatVec apply_derivation(const MatVec& v) const;

    // state-model surface
    MatVec vacuum() const { return unit_; }
    MatVec translate(const MatVec& v) const { return apply_derivation(v); }
    std::vector<MatVec> basis_up_to(int) const;
    int degree(const MatVec&) const { return 0; }  // ungraded
    Parity parity_of(const MatVec&) const { return Parity::even; }
    std::string render(const MatVec& v) const;

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<MatVec>> products_;  // products_[i][j] = e_i e_j
    MatVec unit_;
    std::vector<MatVec> derivation_;  // column images T(e_i)

    void validate() const;
};

StateFormat<int> assoc_format(const AssocAlgebraModel& model);
nlohmann::json mat_state_json(const MatVec& v);
MatVec mat_state_from_json(const nlohmann::json& j);

/// 2x2 rational matrices with basis E11, E12, E21, E22 and the inner
/// derivation T = [E12, -]; T is nilpotent of order three, so e^{zT} is a
/// polynomial of degree two in z.
AssocAlgebraModel mat2_inner_derivation_model();

/// Diagonal 2x2 matrices (commutative) with the zero derivation.
AssocAlgebraModel diag2_commutative_model();

/// The holomorphic field algebra of an associative algebra with derivation:
/// Y(a, z)b = e^{zT}(a) b, so fields carry modes only at n <= -1 with
/// a_(-j-1) b = (T^j a / j!) b.
Algebra<int> holomorphic_algebra(const AssocAlgebraModel& model, std::string id);

}  // namespace falg

#endif
