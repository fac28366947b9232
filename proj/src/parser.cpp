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

// Recursive-descent parser for system files.
//
//   expr     := term (('+' | '-') term)*
//   term     := ['-'] factor ('*' factor)*
//   factor   := atom ('^' exponent)?
//   atom     := integer | generator | variable | '(' expr ')'
//   exponent := natural | variable

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "expoly/exppoly.hpp"

namespace expoly {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { kInteger, kIdent, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 0-based offset in the parsed text
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(const std::string& text, const std::string& generator,
         const std::vector<std::string>& variables, std::size_t line,
         std::size_t column_offset)
      : text_(text),
        generator_(generator),
        variables_(variables),
        line_(line),
        offset_(column_offset) {
    tokenize();
  }

  ExprPtr parse() {
    if (peek().kind == Tok::kEnd) fail(peek(), "empty expression");
    ExprPtr e = expr();
    if (peek().kind != Tok::kEnd)
      fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, offset_ + pos + 1, message);
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    fail(t.pos, message);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        if (i < text_.size() && is_ident_char(text_[i]))
          fail(i, "malformed number");
        tokens_.push_back({Tok::kInteger, text_.substr(start, i - start), start});
        continue;
      }
      if (is_ident_start(c)) {
        while (i < text_.size() && is_ident_char(text_[i])) ++i;
        tokens_.push_back({Tok::kIdent, text_.substr(start, i - start), start});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::kPlus; break;
        case '-': kind = Tok::kMinus; break;
        case '*': kind = Tok::kStar; break;
        case '^': kind = Tok::kCaret; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        default:
          fail(i, std::string("unexpected character '") + c + "'");
      }
      tokens_.push_back({kind, std::string(1, c), start});
      ++i;
    }
    tokens_.push_back({Tok::kEnd, "end of input", text_.size()});
  }

  const Token& peek() const { return tokens_[next_]; }
  const Token& take() { return tokens_[next_++]; }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = take().kind == Tok::kMinus;
      ExprPtr rhs = term();
      lhs = Expr::add(std::move(lhs), minus ? Expr::neg(std::move(rhs)) : std::move(rhs));
    }
    return lhs;
  }

  ExprPtr term() {
    if (peek().kind == Tok::kMinus) {
      take();
      return Expr::neg(term());
    }
    ExprPtr lhs = factor();
    while (peek().kind == Tok::kStar) {
      take();
      lhs = Expr::mul(std::move(lhs), factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek().kind != Tok::kCaret) return base;
    const Token caret = take();
    const Token exp = take();
    if (exp.kind == Tok::kInteger) {
      Integer value(exp.text);
      if (!value.fits_ulong_p()) fail(exp, "exponent too large");
      return Expr::pow_nat(std::move(base), value.get_ui());
    }
    if (exp.kind == Tok::kIdent) {
      auto index = variable_index(exp.text);
      if (!index) {
        if (exp.text == generator_)
          fail(exp, "exponent must be a natural number or a variable");
        fail(exp, "undeclared identifier '" + exp.text + "'");
      }
      if (base->mentions_variables())
        fail(caret, "variable exponent on a base that contains variables");
      return Expr::pow_var(std::move(base), *index);
    }
    fail(exp, "exponent must be a natural number or a variable");
  }

  ExprPtr atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::kInteger:
        return Expr::integer(Integer(t.text));
      case Tok::kIdent: {
        if (!generator_.empty() && t.text == generator_) return Expr::generator();
        if (auto index = variable_index(t.text)) return Expr::variable(*index);
        fail(t, "undeclared identifier '" + t.text + "'");
      }
      case Tok::kLParen: {
        ExprPtr inner = expr();
        if (peek().kind != Tok::kRParen) fail(peek(), "expected ')'");
        take();
        return inner;
      }
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  const std::string& text_;
  const std::string& generator_;
  const std::vector<std::string>& variables_;
  std::size_t line_;
  std::size_t offset_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

struct Line {
  std::size_t number;
  std::size_t column;  // 0-based start of the payload
  std::string payload;
};

// Trims spaces, returning the payload and its starting column.
std::pair<std::string, std::size_t> trim(const std::string& s, std::size_t from) {
  std::size_t b = from;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return {s.substr(b, e - b), b};
}

Ring parse_ring(const Line& line) {
  // The generator is whatever single identifier the polynomial mentions.
  std::string name;
  for (std::size_t i = 0; i < line.payload.size();) {
    if (is_ident_start(line.payload[i]) &&
        (i == 0 || !is_ident_char(line.payload[i - 1]))) {
      std::size_t e = i;
      while (e < line.payload.size() && is_ident_char(line.payload[e])) ++e;
      std::string id = line.payload.substr(i, e - i);
      if (name.empty()) {
        name = id;
      } else if (id != name) {
        throw ParseError(line.number, line.column + i + 1,
                         "ring polynomial must use a single generator, found '" +
                             name + "' and '" + id + "'");
      }
      i = e;
    } else {
      ++i;
    }
  }
  if (name.empty())
    throw ParseError(line.number, line.column + 1,
                     "ring polynomial must have degree at least 1");

  ExprPtr expr = parse_expression(line.payload, "", {name}, line.number, line.column);
  const Ring z = Ring::integers();
  IntVector coeffs;
  for (const auto& t : expand(z, 1, *expr)) {
    if (!t.bases[0].is_one())
      throw ParseError(line.number, line.column + 1,
                       "ring polynomial must not contain exponential terms");
    const std::size_t k = t.powers[0];
    if (coeffs.size() <= k) coeffs.resize(k + 1, Integer(0));
    coeffs[k] += t.coeff.coords()[0];
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2)
    throw ParseError(line.number, line.column + 1,
                     "ring polynomial must have degree at least 1");
  if (coeffs.back() != 1)
    throw ParseError(line.number, line.column + 1,
                     "ring polynomial must be monic");
  return Ring::from_min_poly(std::move(coeffs), name);
}

}  // namespace

ExprPtr parse_expression(const std::string& text, const std::string& generator,
                         const std::vector<std::string>& variables,
                         std::size_t line, std::size_t column_offset) {
  return Parser(text, generator, variables, line, column_offset).parse();
}

ExpPolySystem parse_system(const std::string& text) {
  std::optional<Line> ring_line;
  std::optional<Line> vars_line;
  std::vector<Line> eq_lines;

  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto [content, start] = trim(raw, 0);
    if (content.empty()) continue;
    const auto colon = raw.find(':', start);
    const std::string key =
        colon == std::string::npos ? "" : trim(raw.substr(0, colon), start).first;
    if (key != "ring" && key != "vars" && key != "eq")
      throw ParseError(number, start + 1, "expected 'ring:', 'vars:' or 'eq:'");
    auto [payload, column] = trim(raw, colon + 1);
    Line line{number, column, payload};
    if (key == "ring") {
      if (ring_line) throw ParseError(number, start + 1, "duplicate 'ring:' line");
      ring_line = line;
    } else if (key == "vars") {
      if (vars_line) throw ParseError(number, start + 1, "duplicate 'vars:' line");
      vars_line = line;
    } else {
      eq_lines.push_back(line);
    }
  }
  if (!ring_line) throw ParseError(1, 1, "missing 'ring:' line");
  if (!vars_line) throw ParseError(1, 1, "missing 'vars:' line");
  if (eq_lines.empty()) throw ParseError(1, 1, "missing 'eq:' line");

  Ring ring = parse_ring(*ring_line);

  std::vector<std::string> variables;
  {
    std::istringstream names(vars_line->payload);
    std::string name;
    while (names >> name) {
      const std::size_t col = vars_line->column + vars_line->payload.find(name) + 1;
      if (!is_identifier(name))
        throw ParseError(vars_line->number, col, "invalid variable name '" + name + "'");
      if (name == ring.generator_name())
        throw ParseError(vars_line->number, col,
                         "variable '" + name + "' clashes with the ring generator");
      if (std::find(variables.begin(), variables.end(), name) != variables.end())
        throw ParseError(vars_line->number, col, "duplicate variable '" + name + "'");
      variables.push_back(name);
    }
    if (variables.empty())
      throw ParseError(vars_line->number, vars_line->column + 1,
                       "at least one variable is required");
  }

  ExpPolySystem system{ring, variables, {}};
  for (const auto& line : eq_lines) {
    ExprPtr expr = parse_expression(line.payload, ring.generator_name(), variables,
                                    line.number, line.column);
    system.add_equation(std::move(expr), line.payload);
  }
  return system;
}

std::string format_system(const ExpPolySystem& system) {
  std::ostringstream os;
  os << "ring: " << system.ring.min_poly_string() << "\n";
  os << "vars:";
  for (const auto& v : system.variables) os << ' ' << v;
  os << "\n";
  for (const auto& eq : system.equations) os << "eq: " << eq.source << "\n";
  return os.str();
}

}  // namespace expoly
