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

#include "expoly/encoder.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace {

using namespace expoly;
using expoly::testing::elem;
using expoly::testing::sqrt2_ring;

using Naturals = std::vector<std::uint64_t>;

ExpPolySystem example_system() {
  return parse_system(expoly::testing::read_text(expoly::testing::example_path()));
}

TEST(SelectWeightsTest, Examples) {
  WeightVector w = select_weights({1, 1});
  EXPECT_EQ(w.primes, (Naturals{2, 3}));
  EXPECT_EQ(w.weights, (Naturals{3, 2}));
  w = select_weights({0, 2});
  EXPECT_EQ(w.primes, (Naturals{2, 3}));
  EXPECT_EQ(w.weights, (Naturals{3, 2}));
  w = select_weights({2, 1});
  EXPECT_EQ(w.primes, (Naturals{3, 2}));
  EXPECT_EQ(w.weights, (Naturals{2, 3}));
  EXPECT_EQ(select_weights({7}).weights, (Naturals{1}));
  w = select_weights({0, 0, 0});
  EXPECT_EQ(w.primes, (Naturals{2, 3, 5}));
  EXPECT_EQ(w.weights, (Naturals{15, 10, 6}));
}

TEST(ValidateWeightsTest, Examples) {
  EXPECT_TRUE(validate_weights({3, 2}, {1, 1}));
  EXPECT_FALSE(validate_weights({1, 1}, {1, 1}));
  EXPECT_TRUE(validate_weights({1}, {5}));
  EXPECT_TRUE(validate_weights({2, 3}, {2, 1}));
  EXPECT_TRUE(validate_weights({1, 1}, {0, 0}));
  EXPECT_FALSE(validate_weights({2, 1}, {1, 0}));  // (0,2) also reaches 2
  EXPECT_THROW(validate_weights({0, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(validate_weights({1}, {1, 1}), std::invalid_argument);
}

TEST(ValidateWeightsTest, GreedyChoiceAlwaysValidates) {
  for (std::size_t n = 1; n <= 3; ++n) {
    expoly::testing::for_each_in_box(n, 5, [&](const Exponents& j) {
      EXPECT_TRUE(validate_weights(select_weights(j).weights, j))
          << "j=" << ::testing::PrintToString(j);
    });
  }
}

TEST(BuildBlockTest, ExampleFirstTerm) {
  const Ring r = sqrt2_ring();
  const RingVector bases{elem(r, {1, 1}), r.one()};
  const Block b = build_block(r, bases, {1, 1}, select_weights({1, 1}));
  EXPECT_EQ(b.size, 6u);
  EXPECT_EQ(b.projection, 5u);
  EXPECT_EQ(block_value(b, {3, 1}), elem(r, {21, 15}));
}

TEST(BuildBlockTest, Structure) {
  const Ring r = sqrt2_ring();
  const RingVector bases{elem(r, {1, 1}), elem(r, {0, 3})};
  const Block b = build_block(r, bases, {1, 2}, select_weights({1, 2}));
  // p = (2, 3), M = (3, 2), N = 3 + 4 + 1.
  ASSERT_EQ(b.size, 8u);
  for (std::size_t i = 0; i < 2; ++i) {
    const RingMatrix& psi = b.psi[i];
    for (std::size_t row = 0; row < b.size; ++row) {
      EXPECT_EQ(psi(row, row), bases[i]);
      for (std::size_t col = row + 1; col < b.size; ++col) EXPECT_TRUE(psi(row, col).is_zero());
      for (std::size_t col = 0; col < row; ++col) {
        // Banded Toeplitz: only the M_i-th subdiagonal is populated.
        if (row - col == b.weights[i]) {
          EXPECT_EQ(psi(row, col), bases[i]);
        } else {
          EXPECT_TRUE(psi(row, col).is_zero());
        }
      }
    }
  }
  EXPECT_EQ(b.psi[0] * b.psi[1], b.psi[1] * b.psi[0]);
}

TEST(BuildBlockTest, ConstantAndZeroBase) {
  const Ring r = sqrt2_ring();
  const Block c = build_block(r, {r.one(), r.one()}, {0, 0}, select_weights({0, 0}));
  EXPECT_EQ(c.size, 1u);
  EXPECT_EQ(c.psi[0](0, 0), r.one());
  EXPECT_EQ(block_value(c, {4, 2}), r.one());

  const Block z = build_block(r, {r.zero(), r.one()}, {0, 0}, WeightVector{{3, 2}, {2, 3}});
  EXPECT_EQ(block_value(z, {0, 0}), r.one());
  EXPECT_EQ(block_value(z, {0, 5}), r.one());
  EXPECT_TRUE(block_value(z, {1, 0}).is_zero());
  EXPECT_TRUE(block_value(z, {3, 2}).is_zero());
}

TEST(BuildBlockTest, RejectsInvalidWeights) {
  const Ring r = sqrt2_ring();
  EXPECT_THROW(build_block(r, {r.one(), r.one()}, {1, 1}, WeightVector{{1, 1}, {}}),
               std::invalid_argument);
}

TEST(BuildBlockTest, MatchesFormulaOnBox) {
  const Ring r = sqrt2_ring();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const RingVector bases{expoly::testing::random_element(r, rng, -2, 2),
                           expoly::testing::random_element(r, rng, -2, 2)};
    const Exponents j{static_cast<std::uint64_t>(trial % 3), static_cast<std::uint64_t>(trial % 2)};
    const Block b = build_block(r, bases, j, select_weights(j));
    expoly::testing::orbit_walk(b.psi, b.initial, 6, [&](const Exponents& l, const RingVector& v) {
      EXPECT_EQ(v[b.projection], expoly::testing::encoded_value_oracle(r, bases, j, l));
    });
  }
}

TEST(LinearBlockTest, Examples) {
  const Ring r = sqrt2_ring();
  EXPECT_EQ(block_value(build_linear_block(r, {r.constant(5), r.zero()}), {3, 1}), r.constant(15));
  const Block zero = build_linear_block(r, {r.zero(), r.zero()});
  expoly::testing::for_each_in_box(2, 4, [&](const Exponents& l) {
    EXPECT_TRUE(block_value(zero, l).is_zero());
  });
  EXPECT_EQ(block_value(build_linear_block(r, {r.one(), r.one()}), {2, 3}), r.constant(5));
  const Block g = build_linear_block(r, {elem(r, {0, -5}), r.constant(-21)});
  EXPECT_EQ(block_value(g, {2, 3}), elem(r, {-63, -10}));
}

TEST(AssembleTest, ExampleLayout) {
  for (bool shared : {false, true}) {
    const ExpPolySystem s = example_system();
    const RingLinearSystem sys = assemble(s, {shared, false});
    const Ring& r = s.ring;
    ASSERT_EQ(sys.blocks.size(), 4u);
    std::vector<std::size_t> sizes;
    for (const auto& p : sys.blocks) {
      sizes.push_back(p.block.size);
      EXPECT_EQ(p.block.weights, (Naturals{3, 2}));
    }
    EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 5, 3, 4}));
    EXPECT_EQ(sys.rank, 18u);
    ASSERT_EQ(sys.theta.rows(), 1u);
    // 1-based columns 6, 11, 14, 18.
    for (std::size_t c = 0; c < 18; ++c) {
      RingElement want = r.zero();
      if (c == 5) want = r.one();
      if (c == 10) want = r.constant(-42);
      if (c == 13) want = r.constant(-21);
      if (c == 17) want = elem(r, {0, -5});
      EXPECT_EQ(sys.theta(0, c), want) << "column " << c + 1;
    }
    // a is 1 at x1, x7, x12, x15.
    for (std::size_t c = 0; c < 18; ++c)
      EXPECT_EQ(sys.initial[c], (c == 0 || c == 6 || c == 11 || c == 14) ? r.one() : r.zero());
    // psi_2 is I + J^2 on every block; psi_1 is (1+g)(I + J^3) on the first.
    EXPECT_EQ(sys.psi[0](0, 0), elem(r, {1, 1}));
    EXPECT_EQ(sys.psi[0](3, 0), elem(r, {1, 1}));
    EXPECT_EQ(sys.psi[0](6, 6), r.one());
    EXPECT_EQ(sys.psi[1](2, 0), r.one());
    EXPECT_EQ(sys.psi[1](8, 6), r.one());
  }
}

TEST(AssembleTest, ThetaReproducesEquationValues) {
  for (const EncoderOptions options :
       {EncoderOptions{false, false}, EncoderOptions{true, false}, EncoderOptions{false, true},
        EncoderOptions{true, true}}) {
    const ExpPolySystem s = example_system();
    const RingLinearSystem sys = assemble(s, options);
    EXPECT_EQ(sys.psi[0] * sys.psi[1], sys.psi[1] * sys.psi[0]);
    expoly::testing::orbit_walk(sys.psi, sys.initial, 6,
                                [&](const Exponents& l, const RingVector& v) {
                                  const RingVector values = sys.theta.apply(v);
                                  ASSERT_EQ(values.size(), 1u);
                                  EXPECT_EQ(values[0], eval_expr(s.ring, *s.equations[0].expr, l));
                                });
  }
}

TEST(AssembleTest, LinearBlocksShrinkTheExample) {
  const RingLinearSystem sys = assemble(example_system(), {false, true});
  std::vector<std::size_t> sizes;
  for (const auto& p : sys.blocks) sizes.push_back(p.block.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 5, 2}));
  EXPECT_EQ(sys.rank, 13u);
  EXPECT_TRUE(sys.blocks[2].block.linear);
}

TEST(AssembleTest, TwoEquations) {
  const ExpPolySystem s = parse_system("ring: g\nvars: l1 l2\neq: l1 - 1\neq: l2 - 1\n");
  const RingLinearSystem sys = assemble(s);
  EXPECT_EQ(sys.theta.rows(), 2u);
  EXPECT_EQ(sys.blocks.size(), 4u);
  expoly::testing::orbit_walk(sys.psi, sys.initial, 4, [&](const Exponents& l, const RingVector& v) {
    const RingVector values = sys.theta.apply(v);
    const bool zero = values[0].is_zero() && values[1].is_zero();
    EXPECT_EQ(zero, l == (Exponents{1, 1}));
  });
}

TEST(AssembleTest, ZeroPolynomial) {
  const ExpPolySystem s = parse_system("ring: g^2 - 2\nvars: l1\neq: 0\n");
  const RingLinearSystem sys = assemble(s);
  EXPECT_EQ(sys.rank, 0u);
  EXPECT_EQ(sys.theta.rows(), 1u);
  EXPECT_EQ(sys.theta.cols(), 0u);
  EXPECT_TRUE(sys.theta.apply(sys.initial)[0].is_zero());
}

TEST(AssembleTest, RandomSystemsMatchDirectEvaluation) {
  const std::vector<Ring> rings{sqrt2_ring(), expoly::testing::golden_ring(), Ring::integers()};
  for (std::size_t n = 1; n <= 2; ++n) {
    expoly::testing::ExprGenerator gen(n, 42 + n);
    for (const Ring& r : rings) {
      for (int sample = 0; sample < 3; ++sample) {
        ExpPolySystem s{r, n == 1 ? std::vector<std::string>{"a"}
                                  : std::vector<std::string>{"a", "b"},
                        {}};
        s.add_equation(gen(3), "generated");
        s.add_equation(gen(3), "generated");
        for (bool shared : {false, true}) {
          const RingLinearSystem sys = assemble(s, {shared, sample % 2 == 1});
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
              EXPECT_EQ(sys.psi[i] * sys.psi[k], sys.psi[k] * sys.psi[i]);
          expoly::testing::orbit_walk(
              sys.psi, sys.initial, 4, [&](const Exponents& l, const RingVector& v) {
                const RingVector values = sys.theta.apply(v);
                for (std::size_t e = 0; e < 2; ++e)
                  ASSERT_EQ(values[e], eval_expr(r, *s.equations[e].expr, l));
              });
        }
      }
    }
  }
}

TEST(SharedWeightsTest, FallsBackToMaximum) {
  // Greedy weights for (3,0) are (3,5) [p = (5,3)], which fail for (0,5):
  // 5*3 = 15 = 3*5. Neither candidate covers both, so the maximum is used.
  const WeightVector w = shared_weights({{3, 0}, {0, 5}});
  EXPECT_TRUE(validate_weights(w.weights, {3, 0}));
  EXPECT_TRUE(validate_weights(w.weights, {0, 5}));
}

}  // namespace
