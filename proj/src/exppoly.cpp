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

#include "expoly/exppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace expoly {

ExprPtr Expr::integer(Integer value) {
  auto e = create();
  e->kind_ = Kind::kInteger;
  e->value_ = std::move(value);
  return e;
}

ExprPtr Expr::generator() {
  auto e = create();
  e->kind_ = Kind::kGenerator;
  return e;
}

ExprPtr Expr::variable(std::size_t index) {
  auto e = create();
  e->kind_ = Kind::kVariable;
  e->index_ = index;
  e->has_vars_ = true;
  e->arity_ = index + 1;
  return e;
}

ExprPtr Expr::add(ExprPtr lhs, ExprPtr rhs) {
  auto e = create();
  e->kind_ = Kind::kAdd;
  e->has_vars_ = lhs->has_vars_ || rhs->has_vars_;
  e->arity_ = std::max(lhs->arity_, rhs->arity_);
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

ExprPtr Expr::neg(ExprPtr operand) {
  auto e = create();
  e->kind_ = Kind::kNeg;
  e->has_vars_ = operand->has_vars_;
  e->arity_ = operand->arity_;
  e->lhs_ = std::move(operand);
  return e;
}

ExprPtr Expr::mul(ExprPtr lhs, ExprPtr rhs) {
  auto e = create();
  e->kind_ = Kind::kMul;
  e->has_vars_ = lhs->has_vars_ || rhs->has_vars_;
  e->arity_ = std::max(lhs->arity_, rhs->arity_);
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

ExprPtr Expr::pow_nat(ExprPtr base, std::uint64_t exponent) {
  auto e = create();
  e->kind_ = Kind::kPowNat;
  e->exponent_ = exponent;
  e->has_vars_ = base->has_vars_;
  e->arity_ = base->arity_;
  e->lhs_ = std::move(base);
  return e;
}

ExprPtr Expr::pow_var(ExprPtr base, std::size_t variable) {
  if (base->has_vars_)
    throw std::invalid_argument(
        "variable exponent on a base that contains variables");
  auto e = create();
  e->kind_ = Kind::kPowVar;
  e->index_ = variable;
  e->has_vars_ = true;
  e->arity_ = variable + 1;
  e->lhs_ = std::move(base);
  return e;
}

RingElement eval_expr(const Ring& ring, const Expr& expr, const Exponents& l) {
  switch (expr.kind()) {
    case Expr::Kind::kInteger:
      return ring.constant(expr.value());
    case Expr::Kind::kGenerator:
      return ring.generator();
    case Expr::Kind::kVariable:
      return ring.constant(Integer(static_cast<unsigned long>(l.at(expr.variable_index()))));
    case Expr::Kind::kAdd:
      return eval_expr(ring, *expr.lhs(), l) + eval_expr(ring, *expr.rhs(), l);
    case Expr::Kind::kNeg:
      return -eval_expr(ring, *expr.lhs(), l);
    case Expr::Kind::kMul:
      return eval_expr(ring, *expr.lhs(), l) * eval_expr(ring, *expr.rhs(), l);
    case Expr::Kind::kPowNat:
      return eval_expr(ring, *expr.lhs(), l).pow(expr.exponent());
    case Expr::Kind::kPowVar:
      return eval_expr(ring, *expr.lhs(), l).pow(l.at(expr.variable_index()));
  }
  throw std::logic_error("unknown expression kind");
}

namespace {

// Adds `term` into `acc`, merging with an existing like term. Zero
// coefficients are kept in place so that first-occurrence order survives
// cancellation followed by reappearance; callers prune at the end.
void accumulate(MonomialForm& acc, MonomialTerm term) {
  for (auto& t : acc) {
    if (t.powers == term.powers && t.bases == term.bases) {
      t.coeff = t.coeff + term.coeff;
      return;
    }
  }
  acc.push_back(std::move(term));
}

void accumulate(BinomialForm& acc, BinomialTerm term) {
  for (auto& t : acc) {
    if (t.index == term.index && t.bases == term.bases) {
      t.coeff = t.coeff + term.coeff;
      return;
    }
  }
  acc.push_back(std::move(term));
}

template <class Form>
Form prune(Form form) {
  std::erase_if(form, [](const auto& t) { return t.coeff.is_zero(); });
  return form;
}

MonomialTerm unit_term(const Ring& ring, std::size_t nvars) {
  return MonomialTerm{ring.one(), Exponents(nvars, 0),
                      RingVector(nvars, ring.one())};
}

MonomialForm multiply(const Ring& ring, std::size_t nvars,
                      const MonomialForm& a, const MonomialForm& b) {
  MonomialForm out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      MonomialTerm t = unit_term(ring, nvars);
      t.coeff = x.coeff * y.coeff;
      for (std::size_t i = 0; i < nvars; ++i) {
        t.powers[i] = x.powers[i] + y.powers[i];
        t.bases[i] = x.bases[i] * y.bases[i];
      }
      accumulate(out, std::move(t));
    }
  }
  return prune(std::move(out));
}

MonomialForm expand_node(const Ring& ring, std::size_t nvars,
                         const Expr& expr) {
  switch (expr.kind()) {
    case Expr::Kind::kInteger: {
      MonomialTerm t = unit_term(ring, nvars);
      t.coeff = ring.constant(expr.value());
      return prune(MonomialForm{std::move(t)});
    }
    case Expr::Kind::kGenerator: {
      MonomialTerm t = unit_term(ring, nvars);
      t.coeff = ring.generator();
      return prune(MonomialForm{std::move(t)});
    }
    case Expr::Kind::kVariable: {
      MonomialTerm t = unit_term(ring, nvars);
      t.powers.at(expr.variable_index()) = 1;
      return {std::move(t)};
    }
    case Expr::Kind::kAdd: {
      MonomialForm out = expand_node(ring, nvars, *expr.lhs());
      for (auto& t : expand_node(ring, nvars, *expr.rhs()))
        accumulate(out, std::move(t));
      return prune(std::move(out));
    }
    case Expr::Kind::kNeg: {
      MonomialForm out = expand_node(ring, nvars, *expr.lhs());
      for (auto& t : out) t.coeff = -t.coeff;
      return out;
    }
    case Expr::Kind::kMul:
      return multiply(ring, nvars, expand_node(ring, nvars, *expr.lhs()),
                      expand_node(ring, nvars, *expr.rhs()));
    case Expr::Kind::kPowNat: {
      const MonomialForm base = expand_node(ring, nvars, *expr.lhs());
      MonomialForm out{unit_term(ring, nvars)};
      for (std::uint64_t i = 0; i < expr.exponent(); ++i)
        out = multiply(ring, nvars, out, base);
      return out;
    }
    case Expr::Kind::kPowVar: {
      // The base is variable-free, so it is a single ring constant.
      const RingElement c = eval_expr(ring, *expr.lhs(), Exponents(nvars, 0));
      MonomialTerm t = unit_term(ring, nvars);
      t.bases.at(expr.variable_index()) = c;
      return {std::move(t)};
    }
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace

MonomialForm expand(const Ring& ring, std::size_t nvars, const Expr& expr) {
  if (expr.arity() > nvars)
    throw std::invalid_argument("expression uses undeclared variables");
  return expand_node(ring, nvars, expr);
}

Integer stirling2(std::uint64_t k, std::uint64_t j) {
  if (j > k)
    throw std::invalid_argument("stirling2: j must not exceed k");
  // Row-by-row recurrence S(n, i) = i S(n-1, i) + S(n-1, i-1).
  std::vector<Integer> row(j + 1, Integer(0));
  row[0] = 1;
  for (std::uint64_t n = 1; n <= k; ++n) {
    for (std::uint64_t i = std::min<std::uint64_t>(n, j); i >= 1; --i)
      row[i] = Integer(static_cast<unsigned long>(i)) * row[i] + row[i - 1];
    row[0] = 0;
  }
  return row[j];
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

BinomialForm to_binomial_form(const Ring& ring, std::size_t nvars,
                              const MonomialForm& terms) {
  // conversion[k] lists (j, S(k,j) j!) for j = k down to 0, nonzero only.
  auto conversion = [](std::uint64_t k) {
    std::vector<std::pair<std::uint64_t, Integer>> out;
    for (std::uint64_t j = k + 1; j-- > 0;) {
      Integer c = stirling2(k, j) * factorial(j);
      if (c != 0) out.emplace_back(j, std::move(c));
    }
    return out;
  };

  BinomialForm out;
  for (const auto& term : terms) {
    // Distribute across variables, variable 1 outermost.
    struct Partial {
      Integer factor;
      Exponents index;
    };
    std::vector<Partial> partials{{Integer(1), Exponents{}}};
    for (std::size_t i = 0; i < nvars; ++i) {
      std::vector<Partial> next;
      for (const auto& p : partials) {
        for (const auto& [j, c] : conversion(term.powers[i])) {
          Partial q{p.factor * c, p.index};
          q.index.push_back(j);
          next.push_back(std::move(q));
        }
      }
      partials = std::move(next);
    }
    for (auto& p : partials) {
      accumulate(out, BinomialTerm{term.coeff * ring.constant(p.factor),
                                   std::move(p.index), term.bases});
    }
  }
  return prune(std::move(out));
}

namespace {

RingElement exponential_part(const Ring& ring, const RingVector& bases,
                             const Exponents& l) {
  RingElement out = ring.one();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].is_one()) continue;
    out = out * bases[i].pow(l[i]);
  }
  return out;
}

void check_arity(const RingVector& bases, const Exponents& l) {
  if (bases.size() != l.size())
    throw std::invalid_argument("evaluation point has wrong arity");
}

}  // namespace

RingElement eval_exp_poly(const Ring& ring, const MonomialForm& form,
                          const Exponents& l) {
  RingElement sum = ring.zero();
  for (const auto& t : form) {
    check_arity(t.bases, l);
    Integer poly(1);
    for (std::size_t i = 0; i < l.size(); ++i) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), l[i], t.powers[i]);
      poly *= p;
    }
    sum = sum + t.coeff * ring.constant(poly) * exponential_part(ring, t.bases, l);
  }
  return sum;
}

RingElement eval_exp_poly(const Ring& ring, const BinomialForm& form,
                          const Exponents& l) {
  RingElement sum = ring.zero();
  for (const auto& t : form) {
    check_arity(t.bases, l);
    Integer binom(1);
    for (std::size_t i = 0; i < l.size(); ++i) binom *= binomial(l[i], t.index[i]);
    if (binom == 0) continue;
    sum = sum + t.coeff * ring.constant(binom) * exponential_part(ring, t.bases, l);
  }
  return sum;
}

void ExpPolySystem::add_equation(ExprPtr expr, std::string source) {
  Equation eq;
  eq.source = std::move(source);
  eq.monomial = expand(ring, nvars(), *expr);
  eq.binomial = to_binomial_form(ring, nvars(), eq.monomial);
  eq.expr = std::move(expr);
  equations.push_back(std::move(eq));
}

}  // namespace expoly
