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

#include "expoly/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace expoly {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) { return to_decimal(z); }

json int_vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

json int_matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json element_json(const RingElement& e) { return int_vector_json(e.coords()); }

json ring_vector_json(const RingVector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(element_json(e));
  return out;
}

json ring_matrix_json(const RingMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed system document: " + what);
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) malformed(std::string("missing '") + name + "'");
  return doc.at(name);
}

Integer parse_integer(const json& j) {
  if (!j.is_string()) malformed("integers must be decimal strings");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer '" + j.get<std::string>() + "'");
  return z;
}

IntVector parse_int_vector(const json& j) {
  if (!j.is_array()) malformed("expected an array");
  IntVector out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

IntMatrix parse_int_matrix(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) malformed("matrix has the wrong number of rows");
  IntMatrix out(rows, cols, Integer(0));
  for (std::size_t r = 0; r < rows; ++r) {
    IntVector row = parse_int_vector(j[r]);
    if (row.size() != cols) malformed("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = row[c];
  }
  return out;
}

RingElement parse_element(const Ring& ring, const json& j) {
  IntVector coords = parse_int_vector(j);
  if (coords.size() != ring.degree()) malformed("ring element has the wrong length");
  return ring.element(std::move(coords));
}

RingVector parse_ring_vector(const Ring& ring, const json& j) {
  if (!j.is_array()) malformed("expected an array");
  RingVector out;
  for (const auto& x : j) out.push_back(parse_element(ring, x));
  return out;
}

RingMatrix parse_ring_matrix(const Ring& ring, const json& j, std::size_t rows,
                             std::size_t cols) {
  if (!j.is_array() || j.size() != rows) malformed("matrix has the wrong number of rows");
  RingMatrix out(rows, cols, ring.zero());
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) malformed("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = parse_element(ring, j[r][c]);
  }
  return out;
}

std::vector<std::uint64_t> parse_naturals(const json& j) {
  if (!j.is_array()) malformed("expected an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) malformed("expected a natural number");
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

std::string serialize_system(const CompiledSystem& system, Level level) {
  const ExpPolySystem& src = system.source;
  json doc;
  doc["level"] = to_string(level);
  doc["n"] = src.nvars();
  doc["variables"] = src.variables;
  doc["ring"] = {{"min_poly", int_vector_json(src.ring.min_poly())},
                 {"degree", src.ring.degree()},
                 {"generator", src.ring.generator_name()}};
  doc["source"] = format_system(src);
  doc["options"] = {{"shared_weights", system.options.shared_weights},
                    {"linear_blocks", system.options.linear_blocks}};

  switch (level) {
    case Level::kRing: {
      const RingLinearSystem& s = system.ring;
      doc["dimension"] = s.rank;
      doc["matrices"] = json::array();
      for (const auto& m : s.psi) doc["matrices"].push_back(ring_matrix_json(m));
      doc["initial"] = ring_vector_json(s.initial);
      doc["target_rows"] = ring_matrix_json(s.theta);
      json blocks = json::array();
      for (const auto& p : s.blocks) {
        blocks.push_back({{"equation", p.equation},
                          {"offset", p.offset},
                          {"size", p.block.size},
                          {"projection", p.block.projection},
                          {"coefficient", element_json(p.coefficient)},
                          {"linear", p.block.linear},
                          {"index", p.block.index},
                          {"bases", ring_vector_json(p.block.bases)},
                          {"weights", p.block.weights},
                          {"linear_coeffs", ring_vector_json(p.block.linear_coeffs)}});
      }
      doc["blocks"] = std::move(blocks);
      break;
    }
    case Level::kInteger: {
      const IntegerLinearSystem& s = system.integer;
      doc["dimension"] = s.rank;
      doc["matrices"] = json::array();
      for (const auto& m : s.phi) doc["matrices"].push_back(int_matrix_json(m));
      doc["initial"] = int_vector_json(s.initial);
      doc["target_rows"] = int_matrix_json(s.target);
      break;
    }
    case Level::kTorus: {
      const TorusSystem& s = system.torus;
      doc["dimension"] = s.dimension;
      doc["matrices"] = json::array();
      for (const auto& m : s.endomorphisms) doc["matrices"].push_back(int_matrix_json(m));
      doc["initial"] = int_vector_json(s.exponent_seed);
      doc["target_rows"] = int_matrix_json(s.characters);
      doc["characters"] = int_matrix_json(s.characters);
      json point = json::array();
      for (const auto& x : s.start)
        point.push_back({{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}});
      doc["point"] = std::move(point);
      break;
    }
    case Level::kDirect:
      throw std::invalid_argument("the direct level has no compiled system");
  }
  return doc.dump(2) + "\n";
}

LoadedSystem deserialize_system(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  const auto level = parse_level(field(doc, "level").get<std::string>());
  if (!level || *level == Level::kDirect) malformed("unknown level");

  ExpPolySystem source = parse_system(field(doc, "source").get<std::string>());
  const json& ring_doc = field(doc, "ring");
  const Ring ring = Ring::from_min_poly(parse_int_vector(field(ring_doc, "min_poly")),
                                        field(ring_doc, "generator").get<std::string>());
  if (!(ring == source.ring)) malformed("ring does not match the embedded source");
  const std::size_t n = field(doc, "n").get<std::size_t>();
  if (n != source.nvars()) malformed("variable count does not match the embedded source");
  const std::size_t dim = field(doc, "dimension").get<std::size_t>();
  const json& matrices = field(doc, "matrices");
  if (!matrices.is_array() || matrices.size() != n) malformed("expected one matrix per variable");
  const json& rows = field(doc, "target_rows");
  if (!rows.is_array()) malformed("target_rows must be an array");

  EncoderOptions options;
  if (doc.contains("options")) {
    options.shared_weights = doc["options"].value("shared_weights", false);
    options.linear_blocks = doc["options"].value("linear_blocks", false);
  }

  LoadedSystem out{*level, source, options, IntegerLinearSystem{}};
  switch (*level) {
    case Level::kRing: {
      RingLinearSystem s{ring, n, dim, {}, {}, RingMatrix(), {}};
      for (const auto& m : matrices) s.psi.push_back(parse_ring_matrix(ring, m, dim, dim));
      s.initial = parse_ring_vector(ring, field(doc, "initial"));
      if (s.initial.size() != dim) malformed("initial vector has the wrong length");
      s.theta = parse_ring_matrix(ring, rows, rows.size(), dim);
      for (const auto& b : field(doc, "blocks")) {
        BlockPlacement p{field(b, "equation").get<std::size_t>(),
                         field(b, "offset").get<std::size_t>(),
                         parse_element(ring, field(b, "coefficient")), Block{}};
        p.block.size = field(b, "size").get<std::size_t>();
        p.block.projection = field(b, "projection").get<std::size_t>();
        p.block.linear = field(b, "linear").get<bool>();
        p.block.index = parse_naturals(field(b, "index"));
        p.block.bases = parse_ring_vector(ring, field(b, "bases"));
        p.block.weights = parse_naturals(field(b, "weights"));
        p.block.linear_coeffs = parse_ring_vector(ring, field(b, "linear_coeffs"));
        if (p.offset + p.block.size > dim) malformed("block exceeds the dimension");
        for (const auto& psi : s.psi) {
          RingMatrix local(p.block.size, p.block.size, ring.zero());
          for (std::size_t r = 0; r < p.block.size; ++r)
            for (std::size_t c = 0; c < p.block.size; ++c)
              local(r, c) = psi(p.offset + r, p.offset + c);
          p.block.psi.push_back(std::move(local));
        }
        p.block.initial.assign(s.initial.begin() + p.offset,
                               s.initial.begin() + p.offset + p.block.size);
        s.blocks.push_back(std::move(p));
      }
      out.system = std::move(s);
      break;
    }
    case Level::kInteger: {
      IntegerLinearSystem s;
      s.nvars = n;
      s.rank = dim;
      s.degree = ring.degree();
      for (const auto& m : matrices) s.phi.push_back(parse_int_matrix(m, dim, dim));
      s.initial = parse_int_vector(field(doc, "initial"));
      if (s.initial.size() != dim) malformed("initial vector has the wrong length");
      s.target = parse_int_matrix(rows, rows.size(), dim);
      out.system = std::move(s);
      break;
    }
    case Level::kTorus: {
      TorusSystem s;
      s.nvars = n;
      s.dimension = dim;
      for (const auto& m : matrices) s.endomorphisms.push_back(parse_int_matrix(m, dim, dim));
      s.exponent_seed = parse_int_vector(field(doc, "initial"));
      if (s.exponent_seed.size() != dim) malformed("initial vector has the wrong length");
      const json& chars = field(doc, "characters");
      if (chars != rows) malformed("characters and target_rows differ");
      s.characters = parse_int_matrix(chars, chars.size(), dim);
      for (const auto& p : field(doc, "point")) {
        const Integer num = parse_integer(field(p, "num"));
        const Integer den = parse_integer(field(p, "den"));
        if (num == 0 || den == 0) malformed("torus point coordinates must be nonzero");
        Rational x(num, den);
        x.canonicalize();
        s.start.push_back(x);
      }
      if (s.start.size() != dim) malformed("point has the wrong length");
      if (s.start != power_of_two(s.exponent_seed)) malformed("point is not 2^initial");
      out.system = std::move(s);
      break;
    }
    case Level::kDirect:
      break;
  }
  return out;
}

CompiledSystem restore(const LoadedSystem& loaded) {
  CompiledSystem out = compile(loaded.source, loaded.options);
  switch (loaded.level) {
    case Level::kRing: out.ring = std::get<RingLinearSystem>(loaded.system); break;
    case Level::kInteger: out.integer = std::get<IntegerLinearSystem>(loaded.system); break;
    case Level::kTorus: out.torus = std::get<TorusSystem>(loaded.system); break;
    case Level::kDirect: break;
  }
  return out;
}

std::string serialize_report(const ReturnSetReport& report) {
  json doc;
  doc["box"] = {{"bound", report.box.bound}, {"dims", report.box.dims}};
  doc["agreement"] = report.agreement;
  json levels = json::object();
  for (const auto& [level, set] : report.sets) {
    json tuples = json::array();
    for (const auto& l : set) tuples.push_back(l);
    levels[to_string(level)] = std::move(tuples);
  }
  doc["levels"] = std::move(levels);
  if (report.witness) {
    json values = json::object();
    for (const auto& [level, m] : report.witness_values)
      values[to_string(level)] = {{"member", m.member}, {"value", m.evidence}};
    doc["witness"] = {{"point", *report.witness}, {"values", std::move(values)}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace expoly
