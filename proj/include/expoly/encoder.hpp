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

// Linear dynamical systems over R whose return set is the zero set of an
// exponential-polynomial system.
//
// Each binomial term r * lambda^x * binom(x, j) becomes a block R^N with
// commuting maps psi_i = lambda_i (I + J^M_i), where J is the subdiagonal
// shift and M is a weight vector for which k.M = j.M forces k = j. The last
// coordinate of psi^l(e_1) is then lambda^l binom(l, j). Blocks of all terms
// of all equations are stacked into one block-diagonal system; each equation
// contributes a row of theta that weights its blocks' last coordinates by r.

#pragma once

#include <cstdint>
#include <vector>

#include "expoly/exppoly.hpp"

namespace expoly {

struct WeightVector {
  std::vector<std::uint64_t> weights;  // M
  std::vector<std::uint64_t> primes;   // the primes M was built from
};

/// Greedy choice: p_i is the smallest prime > j_i not used by an earlier
/// variable, and M_i is the product of the other primes. M = (1) when n = 1.
WeightVector select_weights(const Exponents& j);

/// True iff k = j is the only k in N^n with k.M = j.M. Decided by bounded
/// exhaustive search.
bool validate_weights(const std::vector<std::uint64_t>& weights,
                      const Exponents& j);

struct Block {
  std::size_t size = 0;  // N
  std::vector<RingMatrix> psi;
  RingVector initial;          // e_1
  std::size_t projection = 0;  // 0-based index of the projected coordinate

  // Provenance.
  Exponents index;                      // j; empty for linear blocks
  RingVector bases;                     // lambda; empty for linear blocks
  std::vector<std::uint64_t> weights;   // M; empty for linear blocks
  RingVector linear_coeffs;             // r for linear blocks
  bool linear = false;
};

/// Throws std::invalid_argument if the weights do not validate for j.
Block build_block(const Ring& ring, const RingVector& bases, const Exponents& j,
                  const WeightVector& weights);

/// Rank-2 block with psi_i = I + r_i J, whose projection is sum r_i l_i.
Block build_linear_block(const Ring& ring, const RingVector& coeffs);

/// pi(psi_1^l_1 ... psi_n^l_n (v)) computed by repeated application.
RingElement block_value(const Block& block, const Exponents& l);

struct EncoderOptions {
  bool shared_weights = false;
  bool linear_blocks = false;
};

/// Where a block sits in the assembled system and how theta uses it.
struct BlockPlacement {
  std::size_t equation = 0;
  std::size_t offset = 0;  // first coordinate of the block
  RingElement coefficient;  // theta entry at offset + projection
  Block block;
};

struct RingLinearSystem {
  Ring ring;
  std::size_t nvars = 0;
  std::size_t rank = 0;
  std::vector<RingMatrix> psi;
  RingVector initial;
  RingMatrix theta;  // equations x rank
  std::vector<BlockPlacement> blocks;
};

/// Builds the block-diagonal system for every equation of `system`.
RingLinearSystem assemble(const ExpPolySystem& system,
                          const EncoderOptions& options = {});

/// A single weight vector valid for every multi-index in `indices`: the
/// greedy choice for the first index that works for all of them, else the
/// greedy choice for their componentwise maximum.
WeightVector shared_weights(const std::vector<Exponents>& indices);

}  // namespace expoly
