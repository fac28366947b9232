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

#include "expoly/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace expoly {

std::string to_string(Level level) {
  switch (level) {
    case Level::kDirect: return "direct";
    case Level::kRing: return "ring";
    case Level::kInteger: return "integer";
    case Level::kTorus: return "torus";
  }
  return "?";
}

std::optional<Level> parse_level(const std::string& name) {
  for (Level l : {Level::kDirect, Level::kRing, Level::kInteger, Level::kTorus})
    if (to_string(l) == name) return l;
  return std::nullopt;
}

CompiledSystem compile(ExpPolySystem source, const EncoderOptions& options) {
  RingLinearSystem ring = assemble(source, options);
  IntegerLinearSystem integer = descend_system(ring);
  TorusSystem torus = exponentiate(integer);
  return CompiledSystem{std::move(source), options, std::move(ring),
                        std::move(integer), std::move(torus)};
}

namespace {

void check_box(const Box& box, std::size_t nvars) {
  if (box.dims != nvars)
    throw std::invalid_argument("box has " + std::to_string(box.dims) +
                                " dimensions, system has " + std::to_string(nvars) +
                                " variables");
}

// Depth-first walk over the box in lexicographic order. `step(i, state)`
// advances the orbit along axis i; `accept(state)` decides membership.
template <class State, class Step, class Accept>
void walk(const Box& box, std::size_t axis, State state, Exponents& l,
          const Step& step, const Accept& accept, TupleSet& out) {
  if (axis == box.dims) {
    if (accept(state)) out.insert(l);
    return;
  }
  for (std::uint64_t v = 0; v <= box.bound; ++v) {
    l[axis] = v;
    if (v < box.bound) {
      walk(box, axis + 1, state, l, step, accept, out);
      state = step(axis, state);
    } else {
      walk(box, axis + 1, std::move(state), l, step, accept, out);
      break;
    }
  }
}

template <class State, class Step, class Accept>
TupleSet walk_box(const Box& box, State start, const Step& step,
                  const Accept& accept) {
  TupleSet out;
  Exponents l(box.dims, 0);
  walk(box, 0, std::move(start), l, step, accept, out);
  return out;
}

template <class T>
bool all_zero(const std::vector<T>& v, const T& zero) {
  return std::all_of(v.begin(), v.end(), [&](const T& x) { return x == zero; });
}

std::string join(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

}  // namespace

TupleSet return_set_direct(const ExpPolySystem& system, const Box& box) {
  check_box(box, system.nvars());
  TupleSet out;
  Exponents l(box.dims, 0);
  // Odometer over the box.
  while (true) {
    bool zero = true;
    for (const auto& eq : system.equations) {
      if (!eval_exp_poly(system.ring, eq.monomial, l).is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) out.insert(l);
    std::size_t i = box.dims;
    while (i > 0 && l[i - 1] == box.bound) l[--i] = 0;
    if (i == 0) break;
    ++l[i - 1];
  }
  return out;
}

TupleSet return_set_level(const RingLinearSystem& system, const Box& box) {
  check_box(box, system.nvars);
  const RingElement zero = system.ring.zero();
  return walk_box(
      box, system.initial,
      [&](std::size_t i, const RingVector& v) { return system.psi[i].apply(v); },
      [&](const RingVector& v) { return all_zero(system.theta.apply(v), zero); });
}

TupleSet return_set_level(const IntegerLinearSystem& system, const Box& box) {
  check_box(box, system.nvars);
  const Integer zero(0);
  return walk_box(
      box, system.initial,
      [&](std::size_t i, const IntVector& v) { return system.phi[i].apply(v); },
      [&](const IntVector& v) { return all_zero(system.target.apply(v), zero); });
}

TupleSet return_set_level(const TorusSystem& system, const Box& box,
                          TorusMode mode) {
  check_box(box, system.nvars);
  if (mode == TorusMode::kExponent) {
    return walk_box(
        box, system.exponent_seed,
        [&](std::size_t i, const IntVector& e) { return system.endomorphisms[i].apply(e); },
        [&](const IntVector& e) {
          return subgroup_contains_power_of_two(system.characters, e);
        });
  }
  return walk_box(
      box, system.start,
      [&](std::size_t i, const TorusPoint& x) {
        return torus_apply(system.endomorphisms[i], x);
      },
      [&](const TorusPoint& x) { return subgroup_contains(system.characters, x); });
}

RingVector ring_orbit_point(const RingLinearSystem& system, const Exponents& l) {
  if (l.size() != system.nvars) throw std::invalid_argument("orbit point: arity mismatch");
  RingVector v = system.initial;
  for (std::size_t i = l.size(); i-- > 0;)
    for (std::uint64_t step = 0; step < l[i]; ++step) v = system.psi[i].apply(v);
  return v;
}

IntVector integer_orbit_point(const IntegerLinearSystem& system, const Exponents& l) {
  if (l.size() != system.nvars) throw std::invalid_argument("orbit point: arity mismatch");
  IntVector v = system.initial;
  for (std::size_t i = l.size(); i-- > 0;)
    for (std::uint64_t step = 0; step < l[i]; ++step) v = system.phi[i].apply(v);
  return v;
}

Membership member(const CompiledSystem& system, const Exponents& l, Level level,
                  TorusMode mode) {
  if (l.size() != system.source.nvars())
    throw std::invalid_argument("point has " + std::to_string(l.size()) +
                                " coordinates, system has " +
                                std::to_string(system.source.nvars()) + " variables");
  Membership out{true, {}};
  std::vector<std::string> parts;
  switch (level) {
    case Level::kDirect:
      for (const auto& eq : system.source.equations) {
        const RingElement v = eval_expr(system.source.ring, *eq.expr, l);
        out.member = out.member && v.is_zero();
        parts.push_back(v.to_string());
      }
      break;
    case Level::kRing:
      for (const auto& v : system.ring.theta.apply(ring_orbit_point(system.ring, l))) {
        out.member = out.member && v.is_zero();
        parts.push_back(v.to_string());
      }
      break;
    case Level::kInteger:
      for (const auto& v :
           system.integer.target.apply(integer_orbit_point(system.integer, l))) {
        out.member = out.member && v == 0;
        parts.push_back(to_decimal(v));
      }
      break;
    case Level::kTorus:
      if (mode == TorusMode::kExponent) {
        const IntVector e = orbit_point_exponent(system.torus, l);
        for (const auto& v : system.torus.characters.apply(e)) {
          out.member = out.member && v == 0;
          parts.push_back("2^" + to_decimal(v));
        }
      } else {
        const TorusPoint x = orbit_point_rational(system.torus, l);
        for (const auto& v : character_values(system.torus.characters, x)) {
          out.member = out.member && v == 1;
          parts.push_back(v.get_str());
        }
      }
      break;
  }
  out.evidence = join(parts);
  return out;
}

ReturnSetReport cross_check(const CompiledSystem& system, const Box& box,
                            const std::vector<Level>& levels, TorusMode mode) {
  ReturnSetReport report;
  report.box = box;
  for (Level level : levels) {
    switch (level) {
      case Level::kDirect:
        report.sets[level] = return_set_direct(system.source, box);
        break;
      case Level::kRing:
        report.sets[level] = return_set_level(system.ring, box);
        break;
      case Level::kInteger:
        report.sets[level] = return_set_level(system.integer, box);
        break;
      case Level::kTorus:
        report.sets[level] = return_set_level(system.torus, box, mode);
        break;
    }
  }
  // Smallest tuple present in some level but not in all of them.
  TupleSet all;
  for (const auto& [level, set] : report.sets) all.insert(set.begin(), set.end());
  for (const auto& l : all) {
    const bool everywhere = std::all_of(report.sets.begin(), report.sets.end(),
                                        [&](const auto& entry) {
                                          return entry.second.contains(l);
                                        });
    if (!everywhere) {
      report.agreement = false;
      report.witness = l;
      for (const auto& entry : report.sets)
        report.witness_values[entry.first] = member(system, l, entry.first, mode);
      break;
    }
  }
  return report;
}

std::string format_tuple(const Exponents& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(l[i]);
  }
  return out + ")";
}

std::string format_report(const ReturnSetReport& report) {
  std::ostringstream os;
  os << "box: [0," << report.box.bound << "]^" << report.box.dims << "\n";
  for (const auto& [level, set] : report.sets) {
    os << "  " << to_string(level);
    for (std::size_t pad = to_string(level).size(); pad < 8; ++pad) os << ' ';
    os << " " << set.size() << " tuple" << (set.size() == 1 ? " " : "s") << "  {";
    bool first = true;
    for (const auto& l : set) {
      if (!first) os << ", ";
      os << format_tuple(l);
      first = false;
    }
    os << "}\n";
  }
  os << "agreement: " << (report.agreement ? "yes" : "no") << "\n";
  if (report.witness) {
    os << "witness: " << format_tuple(*report.witness) << "\n";
    for (const auto& [level, m] : report.witness_values)
      os << "  " << to_string(level) << ": " << (m.member ? "member" : "not member")
         << " " << m.evidence << "\n";
  }
  return os.str();
}

}  // namespace expoly
