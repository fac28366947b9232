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

// Exponential-polynomial expressions over a ring R and their normal forms.
//
// An expression in variables l1..ln mixes polynomial terms with exponential
// terms c^li, where c is a variable-free expression. Two normal forms are
// maintained:
//
//   monomial form   sum of coeff * lambda^x * x^k
//   binomial form   sum of r * lambda^x * binom(x, j)
//
// where lambda^x = prod lambda_i^x_i, x^k = prod x_i^k_i and
// binom(x, j) = prod binom(x_i, j_i). The binomial form is the input to the
// encoder; the expression tree itself is the ground truth for evaluation.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "expoly/ring.hpp"

namespace expoly {

/// A point of N^n; also used for multi-indices.
using Exponents = std::vector<std::uint64_t>;

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node.
class Expr {
 public:
  enum class Kind {
    kInteger,    // integer literal
    kGenerator,  // the ring generator
    kVariable,   // l_i
    kAdd,
    kNeg,
    kMul,
    kPowNat,  // base ^ natural literal
    kPowVar,  // base ^ l_i, base variable-free
  };

  static ExprPtr integer(Integer value);
  static ExprPtr generator();
  static ExprPtr variable(std::size_t index);
  static ExprPtr add(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr neg(ExprPtr operand);
  static ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
  static ExprPtr pow_nat(ExprPtr base, std::uint64_t exponent);
  /// Throws std::invalid_argument if base mentions any variable.
  static ExprPtr pow_var(ExprPtr base, std::size_t variable);

  Kind kind() const { return kind_; }
  const Integer& value() const { return value_; }
  std::size_t variable_index() const { return index_; }
  std::uint64_t exponent() const { return exponent_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }

  /// True if any variable occurs, including as an exponent.
  bool mentions_variables() const { return has_vars_; }
  /// Largest variable index used plus one (0 for constants).
  std::size_t arity() const { return arity_; }

 private:
  Expr() = default;
  static std::shared_ptr<Expr> create() {
    return std::shared_ptr<Expr>(new Expr());
  }

  Kind kind_ = Kind::kInteger;
  Integer value_;
  std::size_t index_ = 0;
  std::uint64_t exponent_ = 0;
  ExprPtr lhs_;
  ExprPtr rhs_;
  bool has_vars_ = false;
  std::size_t arity_ = 0;
};

/// coeff * lambda^x * x^k
struct MonomialTerm {
  RingElement coeff;
  Exponents powers;
  RingVector bases;
};

/// r * lambda^x * binom(x, j)
struct BinomialTerm {
  RingElement coeff;
  Exponents index;
  RingVector bases;
};

using MonomialForm = std::vector<MonomialTerm>;
using BinomialForm = std::vector<BinomialTerm>;

/// Direct recursive evaluation of the tree at l; the ground truth.
RingElement eval_expr(const Ring& ring, const Expr& expr, const Exponents& l);

/// Distributes an expression into collected monomial terms. Like terms
/// (same powers and bases) are merged in first-occurrence order and zero
/// coefficients dropped.
MonomialForm expand(const Ring& ring, std::size_t nvars, const Expr& expr);

/// Stirling number of the second kind S(k, j). Throws if j > k.
Integer stirling2(std::uint64_t k, std::uint64_t j);

/// binom(n, k) for naturals, 0 when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// Rewrites x^k = sum_j S(k,j) j! binom(x,j) in every variable and collects
/// like (j, lambda) pairs. Within one monomial the larger j come first, so
/// the output order is first occurrence in that enumeration.
BinomialForm to_binomial_form(const Ring& ring, std::size_t nvars,
                              const MonomialForm& terms);

RingElement eval_exp_poly(const Ring& ring, const MonomialForm& form,
                          const Exponents& l);
RingElement eval_exp_poly(const Ring& ring, const BinomialForm& form,
                          const Exponents& l);

struct Equation {
  std::string source;  // text as written, for diagnostics and round-trips
  ExprPtr expr;
  MonomialForm monomial;
  BinomialForm binomial;
};

/// A finite intersection of zero sets of exponential polynomials.
struct ExpPolySystem {
  Ring ring;
  std::vector<std::string> variables;
  std::vector<Equation> equations;

  std::size_t nvars() const { return variables.size(); }

  /// Builds normal forms for an equation tree and appends it.
  void add_equation(ExprPtr expr, std::string source);
};

/// Error in the textual input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses one expression. `generator` names the ring generator and
/// `variables` the declared variables in order. `line` and `column_offset`
/// place reported errors inside a larger file.
ExprPtr parse_expression(const std::string& text, const std::string& generator,
                         const std::vector<std::string>& variables,
                         std::size_t line = 1, std::size_t column_offset = 0);

/// Parses a system file:
///
///   ring: g^2 - 2
///   vars: l1 l2
///   eq: (1+g)^l1 * l1 * l2 - 21*l2^2 - 5*g*l1
///
/// `#` starts a comment. Exactly one ring line, one vars line and at least
/// one eq line are required.
ExpPolySystem parse_system(const std::string& text);

/// Renders the system back in the input format.
std::string format_system(const ExpPolySystem& system);

}  // namespace expoly
