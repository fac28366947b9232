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

// Return sets at every representation level, computed on a finite box.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "expoly/torus.hpp"

namespace expoly {

enum class Level { kDirect, kRing, kInteger, kTorus };
enum class TorusMode { kExponent, kRational };

std::string to_string(Level level);
/// Accepts "direct", "ring", "integer" or "torus".
std::optional<Level> parse_level(const std::string& name);

/// All l in N^n with every l_i <= bound.
struct Box {
  std::uint64_t bound = 0;
  std::size_t dims = 1;
};

using TupleSet = std::set<Exponents>;

/// Every level of one source system.
struct CompiledSystem {
  ExpPolySystem source;
  EncoderOptions options;
  RingLinearSystem ring;
  IntegerLinearSystem integer;
  TorusSystem torus;
};

CompiledSystem compile(ExpPolySystem source, const EncoderOptions& options = {});

TupleSet return_set_direct(const ExpPolySystem& system, const Box& box);

// Orbits are extended one axis at a time, so a box costs O(|box|)
// matrix-vector products.
TupleSet return_set_level(const RingLinearSystem& system, const Box& box);
TupleSet return_set_level(const IntegerLinearSystem& system, const Box& box);
TupleSet return_set_level(const TorusSystem& system, const Box& box,
                          TorusMode mode = TorusMode::kExponent);

/// psi^l(a) computed from scratch.
RingVector ring_orbit_point(const RingLinearSystem& system, const Exponents& l);
/// phi^l(a) computed from scratch.
IntVector integer_orbit_point(const IntegerLinearSystem& system, const Exponents& l);

struct Membership {
  bool member = false;
  std::string evidence;  // the level's value at l, rendered as text
};

Membership member(const CompiledSystem& system, const Exponents& l, Level level,
                  TorusMode mode = TorusMode::kExponent);

struct ReturnSetReport {
  Box box;
  std::map<Level, TupleSet> sets;  // only the levels that were requested
  bool agreement = true;
  std::optional<Exponents> witness;  // smallest tuple the levels disagree on
  std::map<Level, Membership> witness_values;
};

/// Compares the requested levels (all four by default) on `box`.
ReturnSetReport cross_check(const CompiledSystem& system, const Box& box,
                            const std::vector<Level>& levels = {Level::kDirect, Level::kRing,
                                                                Level::kInteger, Level::kTorus},
                            TorusMode mode = TorusMode::kExponent);

std::string format_tuple(const Exponents& l);

/// Text table of a report.
std::string format_report(const ReturnSetReport& report);

}  // namespace expoly
