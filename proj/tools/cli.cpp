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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expoly/serialize.hpp"

namespace expoly::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// Input is either a system file or a document written by `compile`.
CompiledSystem load(const std::string& path, const EncoderOptions& options) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    try {
      return restore(deserialize_system(text));
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  return compile(parse_system(text), options);
}

Exponents parse_point(const std::string& text, std::size_t arity) {
  Exponents out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--point expects comma-separated naturals, got '" + text + "'");
    out.push_back(std::stoull(item));
  }
  if (out.size() != arity)
    throw UsageError("--point has " + std::to_string(out.size()) +
                     " coordinates, system has " + std::to_string(arity) + " variables");
  return out;
}

std::uint64_t default_box() {
  const char* env = std::getenv("EXPOLY_BOX_DEFAULT");
  if (!env || !*env) return 6;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("EXPOLY_BOX_DEFAULT must be a natural number, got '" + s + "'");
  return std::stoull(s);
}

std::vector<Level> parse_levels(const std::string& text) {
  if (text == "all") return {Level::kDirect, Level::kRing, Level::kInteger, Level::kTorus};
  std::vector<Level> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto level = parse_level(item);
    if (!level) throw UsageError("unknown level '" + item + "'");
    out.push_back(*level);
  }
  if (out.empty()) throw UsageError("--levels is empty");
  return out;
}

std::string describe(const CompiledSystem& sys) {
  std::ostringstream os;
  const ExpPolySystem& src = sys.source;
  os << "ring: Z[" << src.ring.generator_name() << "]/(" << src.ring.min_poly_string()
     << "), degree " << src.ring.degree() << "\n";
  os << "vars:";
  for (const auto& v : src.variables) os << ' ' << v;
  os << "\n";
  for (std::size_t e = 0; e < src.equations.size(); ++e) {
    const Equation& eq = src.equations[e];
    os << "equation " << e + 1 << ": " << eq.source << "\n";
    for (const auto& t : eq.binomial) {
      os << "  (" << t.coeff.to_string() << ") * binom" << format_tuple(t.index);
      bool trivial = true;
      for (const auto& b : t.bases) trivial = trivial && b.is_one();
      if (!trivial) {
        os << " * lambda^l, lambda = (";
        for (std::size_t i = 0; i < t.bases.size(); ++i)
          os << (i ? ", " : "") << t.bases[i].to_string();
        os << ")";
      }
      os << "\n";
    }
  }
  os << "blocks:";
  for (const auto& p : sys.ring.blocks) os << ' ' << p.block.size;
  os << "\n";
  os << "ring rank: " << sys.ring.rank << "\n";
  os << "integer rank: " << sys.integer.rank << "\n";
  os << "torus dimension: " << sys.torus.dimension << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile exponential-polynomial systems into torus dynamical systems"};
  app.require_subcommand(1);

  std::string input;
  bool shared = false;
  bool linear = false;
  auto add_encoder_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--shared-weights", shared, "Use one weight vector for all terms");
    cmd->add_flag("--linear-blocks", linear, "Encode linear terms with 2x2 blocks");
  };

  auto* compile_cmd = app.add_subcommand("compile", "Emit the system at one level as JSON");
  compile_cmd->add_option("input", input, "System file")->required();
  std::string level_name = "torus";
  compile_cmd->add_option("--level", level_name, "ring, integer or torus")
      ->check(CLI::IsMember({"ring", "integer", "torus"}));
  std::string output;
  compile_cmd->add_option("-o,--output", output, "Output path (default stdout)");
  add_encoder_flags(compile_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare return sets on a box");
  verify_cmd->add_option("input", input, "System file or compiled document")->required();
  std::optional<std::uint64_t> box_bound;
  verify_cmd->add_option("--box", box_bound, "Box bound B (default 6)");
  std::string levels_text = "all";
  verify_cmd->add_option("--levels", levels_text, "all, or a comma-separated subset");
  std::string torus_mode = "exponent";
  verify_cmd->add_option("--torus-mode", torus_mode, "exponent or rational")
      ->check(CLI::IsMember({"exponent", "rational"}));
  std::string report_path;
  verify_cmd->add_option("--report", report_path, "Write the JSON report here ('-' for stdout)");
  add_encoder_flags(verify_cmd);

  auto* member_cmd = app.add_subcommand("member", "Decide membership of one tuple");
  member_cmd->add_option("input", input, "System file or compiled document")->required();
  std::string point_text;
  member_cmd->add_option("--point", point_text, "Comma-separated naturals")->required();
  std::string member_level = "direct";
  member_cmd->add_option("--level", member_level, "direct, ring, integer or torus")
      ->check(CLI::IsMember({"direct", "ring", "integer", "torus"}));
  member_cmd->add_option("--torus-mode", torus_mode, "exponent or rational")
      ->check(CLI::IsMember({"exponent", "rational"}));
  add_encoder_flags(member_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate every equation at a tuple");
  eval_cmd->add_option("input", input, "System file or compiled document")->required();
  eval_cmd->add_option("--point", point_text, "Comma-separated naturals")->required();

  auto* info_cmd = app.add_subcommand("info", "Summarize normal forms and dimensions");
  info_cmd->add_option("input", input, "System file or compiled document")->required();
  add_encoder_flags(info_cmd);

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const EncoderOptions options{shared, linear};
  const TorusMode mode = torus_mode == "rational" ? TorusMode::kRational : TorusMode::kExponent;
  try {
    if (compile_cmd->parsed()) {
      const CompiledSystem sys = load(input, options);
      write_output(output, serialize_system(sys, *parse_level(level_name)), out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Box box{box_bound ? *box_bound : default_box(), 0};
      const std::vector<Level> levels = parse_levels(levels_text);
      const CompiledSystem sys = load(input, options);
      const ReturnSetReport report =
          cross_check(sys, Box{box.bound, sys.source.nvars()}, levels, mode);
      out << format_report(report);
      if (!report_path.empty()) write_output(report_path, serialize_report(report), out);
      return report.agreement ? kOk : kDisagree;
    }
    if (member_cmd->parsed()) {
      const CompiledSystem sys = load(input, options);
      const Exponents l = parse_point(point_text, sys.source.nvars());
      const Membership m = member(sys, l, *parse_level(member_level), mode);
      out << (m.member ? "true" : "false") << "\n";
      out << member_level << " value: " << m.evidence << "\n";
      return kOk;
    }
    if (eval_cmd->parsed()) {
      const CompiledSystem sys = load(input, options);
      const Exponents l = parse_point(point_text, sys.source.nvars());
      for (const auto& eq : sys.source.equations)
        out << eval_expr(sys.source.ring, *eq.expr, l).to_string() << "\n";
      return kOk;
    }
    if (info_cmd->parsed()) {
      out << describe(load(input, options));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << input << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace expoly::cli
