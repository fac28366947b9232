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

#include "expoly/torus.hpp"

#include <stdexcept>

namespace expoly {

TorusSystem exponentiate(const IntegerLinearSystem& system) {
  TorusSystem out;
  out.nvars = system.nvars;
  out.dimension = system.rank;
  out.endomorphisms = system.phi;
  out.start = power_of_two(system.initial);
  out.characters = system.target;
  out.exponent_seed = system.initial;
  return out;
}

Rational rational_pow(const Rational& x, const Integer& e) {
  if (x == 0) throw std::invalid_argument("torus point has a zero coordinate");
  if (e == 0) return Rational(1);
  const Integer mag = abs(e);
  if (!mag.fits_ulong_p()) throw std::overflow_error("exponent too large");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), mag.get_ui());
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), mag.get_ui());
  Rational out = e > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

TorusPoint power_of_two(const IntVector& exponents) {
  TorusPoint out;
  out.reserve(exponents.size());
  for (const auto& e : exponents) out.push_back(rational_pow(Rational(2), e));
  return out;
}

TorusPoint torus_apply(const IntMatrix& endomorphism, const TorusPoint& x) {
  if (endomorphism.cols() != x.size())
    throw std::invalid_argument("torus_apply: dimension mismatch");
  for (const auto& c : x)
    if (c == 0) throw std::invalid_argument("torus point has a zero coordinate");
  TorusPoint out(endomorphism.rows(), Rational(1));
  for (std::size_t i = 0; i < endomorphism.rows(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (endomorphism(i, j) != 0) out[i] *= rational_pow(x[j], endomorphism(i, j));
  return out;
}

TorusPoint orbit_point_rational(const TorusSystem& system, const Exponents& l) {
  if (l.size() != system.endomorphisms.size())
    throw std::invalid_argument("orbit point: arity mismatch");
  TorusPoint x = system.start;
  for (std::size_t i = l.size(); i-- > 0;)
    for (std::uint64_t step = 0; step < l[i]; ++step)
      x = torus_apply(system.endomorphisms[i], x);
  return x;
}

IntVector orbit_point_exponent(const TorusSystem& system, const Exponents& l) {
  if (l.size() != system.endomorphisms.size())
    throw std::invalid_argument("orbit point: arity mismatch");
  IntVector e = system.exponent_seed;
  for (std::size_t i = l.size(); i-- > 0;)
    for (std::uint64_t step = 0; step < l[i]; ++step)
      e = system.endomorphisms[i].apply(e);
  return e;
}

std::vector<Rational> character_values(const IntMatrix& characters,
                                       const TorusPoint& x) {
  return torus_apply(characters, x);
}

bool subgroup_contains(const IntMatrix& characters, const TorusPoint& x) {
  for (const auto& v : character_values(characters, x))
    if (v != 1) return false;
  return true;
}

bool subgroup_contains_power_of_two(const IntMatrix& characters,
                                    const IntVector& e) {
  for (const auto& v : characters.apply(e))
    if (v != 0) return false;
  return true;
}

}  // namespace expoly
