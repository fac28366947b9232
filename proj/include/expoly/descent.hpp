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

// Restriction of scalars from R to Z. Each ring coordinate x_i expands to d
// consecutive integer coordinates (its power-basis components) and each ring
// matrix entry a to the d x d block regular_matrix(a).

#pragma once

#include "expoly/encoder.hpp"

namespace expoly {

struct IntegerLinearSystem {
  std::size_t nvars = 0;
  std::size_t rank = 0;     // ring rank times degree
  std::size_t degree = 1;   // d of the ring it came from
  std::vector<IntMatrix> phi;
  IntVector initial;
  IntMatrix target;  // L; the target is its kernel
};

IntMatrix descend_matrix(const RingMatrix& m);
IntVector descend_vector(const RingVector& v);
IntegerLinearSystem descend_system(const RingLinearSystem& system);

}  // namespace expoly
