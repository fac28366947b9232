// Copyright 2026 The expoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Monomial dynamical systems on the split torus G_m^N over Q.
//
// An integer matrix A acts by x -> (prod_j x_j^A_ij)_i; composition of these
// maps corresponds to matrix multiplication. An integer linear system
// (phi, a, L) exponentiates to the endomorphisms phi, the start point 2^a and
// the subgroup cut out by the characters x^L_i = 1. Because 2 has infinite
// order in Q*, 2^e lies in that subgroup exactly when L e = 0, so orbit
// points may be tracked by their exponent vectors alone.

#pragma once

#include "expoly/descent.hpp"

namespace expoly {

using TorusPoint = std::vector<Rational>;

struct TorusSystem {
  std::size_t nvars = 0;
  std::size_t dimension = 0;
  std::vector<IntMatrix> endomorphisms;
  TorusPoint start;
  IntMatrix characters;  // one row per character
  IntVector exponent_seed;  // start == 2^exponent_seed
};

TorusSystem exponentiate(const IntegerLinearSystem& system);

/// 2^e componentwise.
TorusPoint power_of_two(const IntVector& exponents);

/// x^e for a nonzero rational and any integer exponent.
Rational rational_pow(const Rational& x, const Integer& e);

/// Exact monomial evaluation. Throws std::invalid_argument on a zero
/// coordinate or a dimension mismatch.
TorusPoint torus_apply(const IntMatrix& endomorphism, const TorusPoint& x);

/// Phi_1^l_1 o ... o Phi_n^l_n (start) by repeated torus_apply.
TorusPoint orbit_point_rational(const TorusSystem& system, const Exponents& l);

/// phi_1^l_1 ... phi_n^l_n a; the orbit point is 2 to this vector.
IntVector orbit_point_exponent(const TorusSystem& system, const Exponents& l);

/// Values of every character at x.
std::vector<Rational> character_values(const IntMatrix& characters,
                                       const TorusPoint& x);

/// True iff every character is exactly 1 at x.
bool subgroup_contains(const IntMatrix& characters, const TorusPoint& x);

/// Same test for the point 2^e, decided on exponents: L e == 0.
bool subgroup_contains_power_of_two(const IntMatrix& characters,
                                    const IntVector& e);

}  // namespace expoly
