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

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace expoly {

WeightVector select_weights(const Exponents& j) {
  if (j.empty()) throw std::invalid_argument("select_weights: n must be >= 1");
  WeightVector out;
  for (const std::uint64_t ji : j) {
    Integer p;
    mpz_nextprime(p.get_mpz_t(), Integer(static_cast<unsigned long>(ji)).get_mpz_t());
    while (std::find(out.primes.begin(), out.primes.end(), p.get_ui()) !=
           out.primes.end()) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    out.primes.push_back(p.get_ui());
  }
  out.weights.assign(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t l = 0; l < j.size(); ++l)
      if (l != i) out.weights[i] *= out.primes[l];
  return out;
}

namespace {

// True if some k != j with k.M == remaining exists among coordinates >= i.
bool other_solution(const std::vector<std::uint64_t>& weights, const Exponents& j,
                    std::size_t i, std::uint64_t remaining, bool differs) {
  if (i + 1 == weights.size()) {
    if (remaining % weights[i] != 0) return false;
    return differs || remaining / weights[i] != j[i];
  }
  for (std::uint64_t k = 0; k * weights[i] <= remaining; ++k) {
    if (other_solution(weights, j, i + 1, remaining - k * weights[i],
                       differs || k != j[i]))
      return true;
  }
  return false;
}

}  // namespace

bool validate_weights(const std::vector<std::uint64_t>& weights,
                      const Exponents& j) {
  if (weights.size() != j.size() || j.empty())
    throw std::invalid_argument("validate_weights: arity mismatch");
  if (std::find(weights.begin(), weights.end(), 0) != weights.end())
    throw std::invalid_argument("validate_weights: weights must be positive");
  std::uint64_t target = 0;
  for (std::size_t i = 0; i < j.size(); ++i) target += j[i] * weights[i];
  return !other_solution(weights, j, 0, target, false);
}

Block build_block(const Ring& ring, const RingVector& bases, const Exponents& j,
                  const WeightVector& weights) {
  const std::size_t n = j.size();
  if (bases.size() != n || weights.weights.size() != n)
    throw std::invalid_argument("build_block: arity mismatch");
  if (!validate_weights(weights.weights, j))
    throw std::invalid_argument("build_block: weights are not injective at j");

  std::uint64_t dot = 0;
  for (std::size_t i = 0; i < n; ++i) dot += weights.weights[i] * j[i];

  Block b;
  b.size = dot + 1;
  b.projection = b.size - 1;
  b.index = j;
  b.bases = bases;
  b.weights = weights.weights;
  b.initial.assign(b.size, ring.zero());
  b.initial[0] = ring.one();
  for (std::size_t i = 0; i < n; ++i) {
    // lambda_i on the diagonal and on the M_i-th subdiagonal.
    RingMatrix psi(b.size, b.size, ring.zero());
    for (std::size_t r = 0; r < b.size; ++r) {
      psi(r, r) = bases[i];
      if (r >= weights.weights[i]) psi(r, r - weights.weights[i]) = bases[i];
    }
    b.psi.push_back(std::move(psi));
  }
  return b;
}

Block build_linear_block(const Ring& ring, const RingVector& coeffs) {
  Block b;
  b.size = 2;
  b.projection = 1;
  b.linear = true;
  b.linear_coeffs = coeffs;
  b.initial = {ring.one(), ring.zero()};
  for (const auto& r : coeffs) {
    RingMatrix psi = ring_identity(ring, 2);
    psi(1, 0) = r;
    b.psi.push_back(std::move(psi));
  }
  return b;
}

RingElement block_value(const Block& block, const Exponents& l) {
  if (l.size() != block.psi.size())
    throw std::invalid_argument("block_value: arity mismatch");
  RingVector v = block.initial;
  for (std::size_t i = block.psi.size(); i-- > 0;)
    for (std::uint64_t step = 0; step < l[i]; ++step) v = block.psi[i].apply(v);
  return v[block.projection];
}

WeightVector shared_weights(const std::vector<Exponents>& indices) {
  if (indices.empty()) throw std::invalid_argument("shared_weights: no indices");
  auto valid_for_all = [&](const WeightVector& w) {
    return std::all_of(indices.begin(), indices.end(), [&](const Exponents& j) {
      return validate_weights(w.weights, j);
    });
  };
  for (const auto& j : indices) {
    WeightVector w = select_weights(j);
    if (valid_for_all(w)) return w;
  }
  // Primes above every j_i satisfy the injectivity argument for each index.
  Exponents top = indices.front();
  for (const auto& j : indices)
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], j[i]);
  return select_weights(top);
}

namespace {

bool is_linear_term(const BinomialTerm& t) {
  if (!std::all_of(t.bases.begin(), t.bases.end(),
                   [](const RingElement& b) { return b.is_one(); }))
    return false;
  std::uint64_t total = 0;
  for (const auto ji : t.index) {
    if (ji > 1) return false;
    total += ji;
  }
  return total == 1;
}

}  // namespace

RingLinearSystem assemble(const ExpPolySystem& system,
                          const EncoderOptions& options) {
  const Ring& ring = system.ring;
  const std::size_t n = system.nvars();

  std::optional<WeightVector> common;
  if (options.shared_weights) {
    std::vector<Exponents> indices;
    for (const auto& eq : system.equations)
      for (const auto& t : eq.binomial) indices.push_back(t.index);
    if (!indices.empty()) common = shared_weights(indices);
  }

  RingLinearSystem out{ring, n, 0, {}, {}, RingMatrix(), {}};
  for (std::size_t e = 0; e < system.equations.size(); ++e) {
    const BinomialForm& terms = system.equations[e].binomial;

    // Linear terms of one equation share a single rank-2 block placed where
    // the first of them occurs.
    std::optional<std::size_t> linear_slot;
    RingVector linear_coeffs(n, ring.zero());
    for (const auto& t : terms) {
      if (options.linear_blocks && is_linear_term(t)) {
        const auto i = static_cast<std::size_t>(
            std::find(t.index.begin(), t.index.end(), 1u) - t.index.begin());
        linear_coeffs[i] = linear_coeffs[i] + t.coeff;
        if (!linear_slot) {
          linear_slot = out.blocks.size();
          out.blocks.push_back({e, 0, ring.one(), Block{}});
        }
        continue;
      }
      const WeightVector w = common ? *common : select_weights(t.index);
      out.blocks.push_back({e, 0, t.coeff, build_block(ring, t.bases, t.index, w)});
    }
    if (linear_slot) out.blocks[*linear_slot].block = build_linear_block(ring, linear_coeffs);
  }

  for (auto& placed : out.blocks) {
    placed.offset = out.rank;
    out.rank += placed.block.size;
  }

  out.psi.assign(n, RingMatrix(out.rank, out.rank, ring.zero()));
  out.initial.assign(out.rank, ring.zero());
  out.theta = RingMatrix(system.equations.size(), out.rank, ring.zero());
  for (const auto& placed : out.blocks) {
    const Block& b = placed.block;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < b.size; ++r)
        for (std::size_t c = 0; c < b.size; ++c)
          out.psi[i](placed.offset + r, placed.offset + c) = b.psi[i](r, c);
    for (std::size_t r = 0; r < b.size; ++r) out.initial[placed.offset + r] = b.initial[r];
    RingElement& entry = out.theta(placed.equation, placed.offset + b.projection);
    entry = entry + placed.coefficient;
  }
  return out;
}

}  // namespace expoly
