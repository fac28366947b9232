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

namespace expoly {

IntMatrix descend_matrix(const RingMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    // No entry to read the degree from; the zero map stays zero-sized.
    return IntMatrix(m.rows(), m.cols(), Integer(0));
  }
  const std::size_t d = m(0, 0).ring().degree();
  IntMatrix out(m.rows() * d, m.cols() * d, Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      const IntMatrix block = m(i, j).regular_matrix();
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out(i * d + r, j * d + c) = block(r, c);
    }
  }
  return out;
}

IntVector descend_vector(const RingVector& v) {
  IntVector out;
  for (const auto& x : v) out.insert(out.end(), x.coords().begin(), x.coords().end());
  return out;
}

IntegerLinearSystem descend_system(const RingLinearSystem& system) {
  const std::size_t d = system.ring.degree();
  IntegerLinearSystem out;
  out.nvars = system.nvars;
  out.degree = d;
  out.rank = system.rank * d;
  for (const auto& psi : system.psi) {
    IntMatrix phi = descend_matrix(psi);
    if (system.rank == 0) phi = IntMatrix(0, 0, Integer(0));
    out.phi.push_back(std::move(phi));
  }
  out.initial = descend_vector(system.initial);
  out.target = system.rank == 0
                   ? IntMatrix(system.theta.rows() * d, 0, Integer(0))
                   : descend_matrix(system.theta);
  return out;
}

}  // namespace expoly
