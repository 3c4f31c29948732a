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

#ifndef FALG_PARITY_HPP
#define FALG_PARITY_HPP

#include "falg/rational.hpp"

namespace falg {

enum class Parity { even, odd };

inline Parity parity_product(Parity a, Parity b) {
    return (a == Parity::odd) != (b == Parity::odd) ? Parity::odd : Parity::even;
}

/// Koszul pair sign p(a,b): -1 iff both arguments are odd. Symmetric and
/// multiplicative under parity products.
inline Rational koszul_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? Rational(-1) : Rational(1);
}

}  // namespace falg

#endif
