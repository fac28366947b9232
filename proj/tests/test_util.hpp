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

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "expoly/exppoly.hpp"
#include "expoly/ring.hpp"

namespace expoly::testing {

inline Ring sqrt2_ring() { return Ring::from_min_poly({-2, 0, 1}, "g"); }
inline Ring golden_ring() { return Ring::from_min_poly({-1, -1, 1}, "g"); }

inline RingElement elem(const Ring& ring, std::initializer_list<long> coords) {
  IntVector v;
  for (long c : coords) v.emplace_back(c);
  return ring.element(std::move(v));
}

inline RingElement random_element(const Ring& ring, std::mt19937_64& rng, long lo = -9,
                                  long hi = 9) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntVector v;
  for (std::size_t i = 0; i < ring.degree(); ++i) v.emplace_back(dist(rng));
  return ring.element(std::move(v));
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string example_path() { return std::string(EXPOLY_TEST_DATA) + "/example.sys"; }

}  // namespace expoly::testing

namespace expoly::testing {

/// binom(n, k) by the falling-factorial product, independent of GMP's.
inline Integer binom_oracle(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  Integer num(1), den(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= Integer(static_cast<unsigned long>(n - i));
    den *= Integer(static_cast<unsigned long>(i + 1));
  }
  return num / den;
}

/// Random expression trees with small literals and exponents.
class ExprGenerator {
 public:
  ExprGenerator(std::size_t nvars, std::uint64_t seed) : nvars_(nvars), rng_(seed) {}

  ExprPtr operator()(int depth = 4) { return node(depth, true); }

 private:
  ExprPtr leaf(bool allow_vars) {
    const int pick = std::uniform_int_distribution<int>(0, allow_vars ? 2 : 1)(rng_);
    if (pick == 0) return Expr::integer(Integer(std::uniform_int_distribution<long>(-6, 6)(rng_)));
    if (pick == 1) return Expr::generator();
    return Expr::variable(std::uniform_int_distribution<std::size_t>(0, nvars_ - 1)(rng_));
  }

  ExprPtr node(int depth, bool allow_vars) {
    if (depth <= 0) return leaf(allow_vars);
    switch (std::uniform_int_distribution<int>(0, 6)(rng_)) {
      case 0:
      case 1:
        return Expr::add(node(depth - 1, allow_vars), node(depth - 1, allow_vars));
      case 2:
        return Expr::mul(node(depth - 1, allow_vars), node(depth - 1, allow_vars));
      case 3:
        return Expr::neg(node(depth - 1, allow_vars));
      case 4:
        return Expr::pow_nat(node(depth - 2, allow_vars),
                             std::uniform_int_distribution<std::uint64_t>(0, 3)(rng_));
      case 5:
        if (allow_vars)
          return Expr::pow_var(node(depth - 2, false),
                               std::uniform_int_distribution<std::size_t>(0, nvars_ - 1)(rng_));
        [[fallthrough]];
      default:
        return leaf(allow_vars);
    }
  }

  std::size_t nvars_;
  std::mt19937_64 rng_;
};

}  // namespace expoly::testing

namespace expoly::testing {

/// Calls fn(l) for every l in [0,bound]^n in lexicographic order.
template <class Fn>
void for_each_in_box(std::size_t n, std::uint64_t bound, Fn&& fn) {
  Exponents l(n, 0);
  while (true) {
    fn(static_cast<const Exponents&>(l));
    std::size_t i = n;
    while (i > 0 && l[i - 1] == bound) l[--i] = 0;
    if (i == 0) return;
    ++l[i - 1];
  }
}

/// lambda^l * binom(l, j), computed from ring powers and binom_oracle.
inline RingElement encoded_value_oracle(const Ring& ring, const RingVector& bases,
                                        const Exponents& j, const Exponents& l) {
  RingElement out = ring.one();
  for (std::size_t i = 0; i < l.size(); ++i)
    out = out * bases[i].pow(l[i]) * ring.constant(binom_oracle(l[i], j[i]));
  return out;
}

/// Visits M^l v for every l in the box, stepping one axis at a time.
template <class T, class Fn>
void orbit_walk(const std::vector<Matrix<T>>& maps, const std::vector<T>& start,
                std::uint64_t bound, Fn&& fn) {
  Exponents l(maps.size(), 0);
  auto rec = [&](auto& self, std::size_t axis, std::vector<T> v) -> void {
    if (axis == maps.size()) {
      fn(static_cast<const Exponents&>(l), v);
      return;
    }
    for (std::uint64_t x = 0; x <= bound; ++x) {
      l[axis] = x;
      self(self, axis + 1, v);
      if (x < bound) v = maps[axis].apply(v);
    }
  };
  rec(rec, 0, start);
}

}  // namespace expoly::testing

namespace expoly::testing {

/// c_0 + c_1 g + ... as an expression tree.
inline ExprPtr expr_of(const RingElement& x) {
  ExprPtr out = Expr::integer(x.coords()[0]);
  for (std::size_t k = 1; k < x.coords().size(); ++k)
    out = Expr::add(out, Expr::mul(Expr::integer(x.coords()[k]),
                                   Expr::pow_nat(Expr::generator(), k)));
  return out;
}

/// h - h(root), which vanishes at least at `root`.
inline ExprPtr shifted_to_root(const Ring& ring, const ExprPtr& h, const Exponents& root) {
  return Expr::add(h, Expr::neg(expr_of(eval_expr(ring, *h, root))));
}

}  // namespace expoly::testing
