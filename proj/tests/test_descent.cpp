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

#include "expoly/descent.hpp"

#include <gtest/gtest.h>

#include "expoly/verify.hpp"
#include "test_util.hpp"

namespace {

using namespace expoly;
using expoly::testing::elem;

IntMatrix int_matrix(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.front().size(), Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RingMatrix random_ring_matrix(const Ring& r, std::mt19937_64& rng, std::size_t rows,
                              std::size_t cols) {
  RingMatrix m(rows, cols, r.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = expoly::testing::random_element(r, rng, -3, 3);
  return m;
}

RingVector random_ring_vector(const Ring& r, std::mt19937_64& rng, std::size_t size) {
  RingVector v;
  for (std::size_t i = 0; i < size; ++i)
    v.push_back(expoly::testing::random_element(r, rng, -3, 3));
  return v;
}

TEST(DescendTest, SingleEntry) {
  const Ring r = expoly::testing::sqrt2_ring();
  RingMatrix m(1, 1, r.zero());
  m(0, 0) = elem(r, {1, 1});
  EXPECT_EQ(descend_matrix(m), int_matrix({{1, 2}, {1, 1}}));
  m(0, 0) = elem(r, {0, -5});
  EXPECT_EQ(descend_matrix(m), int_matrix({{0, -10}, {-5, 0}}));
}

TEST(DescendTest, VectorInterleavesCoordinates) {
  const Ring r = expoly::testing::sqrt2_ring();
  const IntVector v = descend_vector({elem(r, {1, 2}), elem(r, {3, 4})});
  EXPECT_EQ(v, (IntVector{1, 2, 3, 4}));
}

TEST(DescendTest, ExampleSystem) {
  const ExpPolySystem s = parse_system(expoly::testing::read_text(expoly::testing::example_path()));
  const IntegerLinearSystem sys = descend_system(assemble(s));
  EXPECT_EQ(sys.rank, 36u);
  EXPECT_EQ(sys.degree, 2u);
  ASSERT_EQ(sys.target.rows(), 2u);
  ASSERT_EQ(sys.target.cols(), 36u);
  // Integer coordinate 2(i-1) is y_i, 2(i-1)+1 is z_i.
  auto y = [](std::size_t i) { return 2 * (i - 1); };
  auto z = [](std::size_t i) { return 2 * (i - 1) + 1; };
  for (std::size_t c = 0; c < 36; ++c) {
    Integer want_y = 0, want_z = 0;
    if (c == y(6)) want_y = 1;
    if (c == y(11)) want_y = -42;
    if (c == y(14)) want_y = -21;
    if (c == z(18)) want_y = -10;
    if (c == z(6)) want_z = 1;
    if (c == z(11)) want_z = -42;
    if (c == z(14)) want_z = -21;
    if (c == y(18)) want_z = -5;
    EXPECT_EQ(sys.target(0, c), want_y) << "column " << c;
    EXPECT_EQ(sys.target(1, c), want_z) << "column " << c;
  }
  IntVector a(36, 0);
  for (std::size_t i : {1, 7, 12, 15}) a[y(i)] = 1;
  EXPECT_EQ(sys.initial, a);
}

TEST(DescendTest, ZeroRank) {
  const ExpPolySystem s = parse_system("ring: g^2 - 2\nvars: l1\neq: 0\n");
  const IntegerLinearSystem sys = descend_system(assemble(s));
  EXPECT_EQ(sys.rank, 0u);
  EXPECT_EQ(sys.phi[0].rows(), 0u);
  EXPECT_EQ(sys.target.rows(), 2u);
  EXPECT_EQ(sys.target.cols(), 0u);
}

class DescentPropertyTest : public ::testing::TestWithParam<int> {
 protected:
  Ring ring() const {
    switch (GetParam()) {
      case 0: return expoly::testing::sqrt2_ring();
      case 1: return expoly::testing::golden_ring();
      case 2: return Ring::from_min_poly({Integer(-3), Integer(1), Integer(0), Integer(1)}, "g");
      default: return Ring::integers();
    }
  }
};

TEST_P(DescentPropertyTest, MultiplicationAndAdditionCommute) {
  const Ring r = ring();
  std::mt19937_64 rng(7 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const RingMatrix a = random_ring_matrix(r, rng, 3, 4);
    const RingMatrix b = random_ring_matrix(r, rng, 4, 2);
    const RingMatrix c = random_ring_matrix(r, rng, 3, 4);
    const RingVector v = random_ring_vector(r, rng, 4);
    EXPECT_EQ(descend_matrix(a * b), descend_matrix(a) * descend_matrix(b));
    EXPECT_EQ(descend_matrix(a + c), descend_matrix(a) + descend_matrix(c));
    EXPECT_EQ(descend_vector(a.apply(v)), descend_matrix(a).apply(descend_vector(v)));
  }
}

TEST_P(DescentPropertyTest, OrbitsAndReturnSetsArePreserved) {
  const Ring r = ring();
  const std::vector<std::string> vars{"a", "b"};
  expoly::testing::ExprGenerator gen(2, 100 + GetParam());
  for (int sample = 0; sample < 4; ++sample) {
    ExpPolySystem s{r, vars, {}};
    s.add_equation(gen(3), "generated");
    const RingLinearSystem ring_sys = assemble(s);
    const IntegerLinearSystem int_sys = descend_system(ring_sys);
    expoly::testing::for_each_in_box(2, 3, [&](const Exponents& l) {
      EXPECT_EQ(descend_vector(ring_orbit_point(ring_sys, l)), integer_orbit_point(int_sys, l));
    });
    const Box box{4, 2};
    EXPECT_EQ(return_set_level(ring_sys, box), return_set_level(int_sys, box));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, DescentPropertyTest, ::testing::Range(0, 4));

}  // namespace
