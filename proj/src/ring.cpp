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

#include "expoly/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace expoly {

struct Ring::Impl {
  IntVector min_poly;  // constant term first, leading coefficient 1
  std::string generator;
};

namespace {

const Ring::Impl& impl_of(const std::shared_ptr<const Ring::Impl>& p) {
  if (!p) throw std::logic_error("use of an element that belongs to no ring");
  return *p;
}

// Writes c*g^k, or c alone when k == 0, with sign handled by the caller.
void write_monomial(std::ostringstream& os, const Integer& abs_coeff,
                    std::size_t k, const std::string& gen, const char* mul) {
  if (k == 0) {
    os << abs_coeff.get_str();
    return;
  }
  if (abs_coeff != 1) os << abs_coeff.get_str() << mul;
  os << gen;
  if (k > 1) os << '^' << k;
}

std::string polynomial_string(const IntVector& coeffs, const std::string& gen,
                              const char* mul) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    write_monomial(os, mag, k, gen, mul);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

Ring Ring::from_min_poly(IntVector coeffs, std::string generator_name) {
  if (coeffs.size() < 2)
    throw std::invalid_argument(
        "minimal polynomial must have degree at least 1");
  if (coeffs.back() != 1)
    throw std::invalid_argument("minimal polynomial must be monic");
  auto impl = std::make_shared<Impl>();
  impl->min_poly = std::move(coeffs);
  impl->generator = std::move(generator_name);
  return Ring(std::move(impl));
}

Ring Ring::integers(std::string generator_name) {
  return from_min_poly({Integer(0), Integer(1)}, std::move(generator_name));
}

std::size_t Ring::degree() const { return impl_of(impl_).min_poly.size() - 1; }
const IntVector& Ring::min_poly() const { return impl_of(impl_).min_poly; }
const std::string& Ring::generator_name() const {
  return impl_of(impl_).generator;
}

RingElement Ring::zero() const {
  return RingElement(*this, IntVector(degree(), Integer(0)));
}

RingElement Ring::one() const { return constant(Integer(1)); }

RingElement Ring::constant(const Integer& c) const {
  IntVector coords(degree(), Integer(0));
  coords[0] = c;
  return RingElement(*this, std::move(coords));
}

RingElement Ring::generator() const {
  if (degree() == 1) {
    // g satisfies g = -m_0 when d = 1.
    return constant(-min_poly()[0]);
  }
  IntVector coords(degree(), Integer(0));
  coords[1] = 1;
  return RingElement(*this, std::move(coords));
}

RingElement Ring::element(IntVector coords) const {
  if (coords.size() != degree())
    throw std::invalid_argument("element has " + std::to_string(coords.size()) +
                                " coordinates, ring degree is " +
                                std::to_string(degree()));
  return RingElement(*this, std::move(coords));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  return a.impl_->min_poly == b.impl_->min_poly;
}

std::string Ring::min_poly_string() const {
  // Highest degree first reads naturally for a defining polynomial.
  const IntVector& m = min_poly();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = m.size(); i-- > 0;) {
    const Integer& c = m[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    write_monomial(os, abs(c), i, generator_name(), "*");
    first = false;
  }
  return os.str();
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  a.ring().degree();
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument(
        "ring elements belong to different rings (degrees " +
        std::to_string(a.coords().size()) + " and " +
        std::to_string(b.coords().size()) + ")");
  }
}

}  // namespace

bool RingElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool RingElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  IntVector out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coords_[i] + b.coords_[i];
  return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a) {
  IntVector out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coords_[i];
  return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  IntVector out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coords_[i] - b.coords_[i];
  return RingElement(a.ring_, std::move(out));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const std::size_t d = a.coords_.size();
  const IntVector& m = a.ring_.min_poly();
  IntVector prod(2 * d - 1, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  // g^d = -(m_0 + m_1 g + ... + m_{d-1} g^{d-1})
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    const Integer top = prod[k];
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= top * m[i];
    prod[k] = 0;
  }
  prod.resize(d);
  return RingElement(a.ring_, std::move(prod));
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.coords_ == b.coords_ && a.ring_ == b.ring_;
}

std::strong_ordering operator<=>(const RingElement& a, const RingElement& b) {
  if (a.coords_.size() != b.coords_.size())
    return a.coords_.size() <=> b.coords_.size();
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RingElement RingElement::pow(std::uint64_t k) const {
  RingElement result = ring_.one();
  RingElement base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

IntMatrix RingElement::regular_matrix() const {
  const std::size_t d = coords_.size();
  IntMatrix out(d, d, Integer(0));
  // Column j holds the coordinates of this * g^j.
  RingElement column = *this;
  const RingElement g = ring_.degree() > 1 ? ring_.generator() : ring_.one();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) out(i, j) = column.coords_[i];
    if (j + 1 < d) column = column * g;
  }
  return out;
}

std::string RingElement::to_string() const {
  return polynomial_string(coords_, ring_.generator_name(), "*");
}

RingMatrix ring_identity(const Ring& ring, std::size_t n) {
  return RingMatrix::identity(n, ring.zero(), ring.one());
}

std::string to_decimal(const Integer& z) { return z.get_str(10); }

}  // namespace expoly
