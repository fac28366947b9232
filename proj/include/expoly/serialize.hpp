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

// JSON documents for compiled systems and verification reports.
//
// A system document has the fields
//
//   level        "ring" | "integer" | "torus"
//   n            number of variables
//   variables    variable names
//   dimension    rank of the module / dimension of the torus
//   ring         {min_poly, degree, generator}
//   matrices     one square matrix per variable (arrays of rows)
//   initial      start vector (exponent vector a at torus level)
//   target_rows  rows of the map whose kernel is the target
//   source       the system file the document was compiled from
//   options      encoder flags used for the compilation
//
// plus `blocks` at ring level and `point` ({num, den} per coordinate) and
// `characters` at torus level. Every integer is a decimal string; ring-level
// entries are arrays of power-basis coordinates.

#pragma once

#include <string>
#include <variant>

#include "expoly/verify.hpp"

namespace expoly {

/// Pretty-printed JSON for one level of a compiled system. `level` must not
/// be Level::kDirect.
std::string serialize_system(const CompiledSystem& system, Level level);

struct LoadedSystem {
  Level level;
  ExpPolySystem source;
  EncoderOptions options;
  std::variant<RingLinearSystem, IntegerLinearSystem, TorusSystem> system;
};

/// Inverse of serialize_system. Throws std::invalid_argument on a malformed
/// document.
LoadedSystem deserialize_system(const std::string& json_text);

/// Recompiles the embedded source and swaps in the stored level, so that a
/// report over the result exercises the deserialized data.
CompiledSystem restore(const LoadedSystem& loaded);

std::string serialize_report(const ReturnSetReport& report);

}  // namespace expoly
