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

// Exact arithmetic in a single-generator order Z[g]/(m(g)), m monic.
//
// Elements are integer coordinate vectors in the power basis 1, g, ..., g^(d-1),
// so equality of elements is equality of coordinates. The polynomial m need
// not be irreducible: the constructions built on top of this only require
// that the ring has no Z-torsion, which monicity guarantees.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "expoly/matrix.hpp"

namespace expoly {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using IntMatrix = Matrix<Integer>;

class RingElement;

/// Handle to an immutable ring description. Copies share the description.
class Ring {
 public:
  /// Builds Z[g]/(m) from the coefficients of m, constant term first.
  /// Throws std::invalid_argument unless m is monic of degree >= 1.
  static Ring from_min_poly(IntVector coeffs, std::string generator_name);

  /// The rational integers, presented as Z[g]/(g).
  static Ring integers(std::string generator_name = "g");

  std::size_t degree() const;
  const IntVector& min_poly() const;
  const std::string& generator_name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement constant(const Integer& c) const;
  RingElement generator() const;
  RingElement element(IntVector coords) const;

  /// Same min_poly (the generator name is cosmetic).
  friend bool operator==(const Ring& a, const Ring& b);

  /// Renders m(g) as text, e.g. "g^2 - 2".
  std::string min_poly_string() const;

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend class RingElement;
};

class RingElement {
 public:
  /// A default-constructed element belongs to no ring; it exists only so that
  /// containers can be sized before assignment.
  RingElement() = default;

  const Ring& ring() const { return ring_; }
  const IntVector& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  /// Same ring and same coordinates.
  friend bool operator==(const RingElement& a, const RingElement& b);

  /// Lexicographic order on coordinates; used only for keying containers.
  friend std::strong_ordering operator<=>(const RingElement& a,
                                          const RingElement& b);

  /// a^k with the convention 0^0 = 1.
  RingElement pow(std::uint64_t k) const;

  /// Matrix of multiplication by this element on coordinate columns:
  /// regular_matrix() * b.coords() == (this * b).coords().
  IntMatrix regular_matrix() const;

  /// Human-readable form such as "-20 - 4*g" or "3 + 2*g^2".
  std::string to_string() const;

 private:
  RingElement(Ring ring, IntVector coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {}

  Ring ring_{nullptr};
  IntVector coords_;

  friend class Ring;
};

using RingVector = std::vector<RingElement>;
using RingMatrix = Matrix<RingElement>;

RingMatrix ring_identity(const Ring& ring, std::size_t n);

/// Writes an arbitrary-precision integer in decimal.
std::string to_decimal(const Integer& z);

}  // namespace expoly
