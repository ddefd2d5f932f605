#pragma once

// Expression language for tropical piecewise-linear functions.
//
// Concrete syntax uses ordinary arithmetic notation with tropical meaning:
//   a + b        a ⊗ b            (left-associative)
//   a - b        a ⊘ b            (left-associative)
//   r*e, e*r     e^{⊗r}           (r a constant; `p/q` allowed here only)
//   -e           negation          (binds looser than `*`)
//   max(...)     ⊕ of two or more arguments
//   min(...)     extended-real minimum (not a semiring operation)
//   eps, ε       the tropical zero

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace ast {
struct Const { Scalar value; };
struct Var { std::string name; };
struct Max { std::vector<ExprPtr> args; };
struct Min { std::vector<ExprPtr> args; };
struct Sum { ExprPtr left, right; };
struct Diff { ExprPtr left, right; };
struct Scale { double factor; ExprPtr operand; };
struct Neg { ExprPtr operand; };
}  // namespace ast

struct Expr {
  std::variant<ast::Const, ast::Var, ast::Max, ast::Min, ast::Sum, ast::Diff,
               ast::Scale, ast::Neg>
      node;

  template <typename T>
  const T* as() const noexcept { return std::get_if<T>(&node); }
};

/// Deep structural equality; constants and factors compare exactly.
bool operator==(const Expr& a, const Expr& b);

ExprPtr make_const(Scalar value);
ExprPtr make_var(std::string name);
ExprPtr make_max(std::vector<ExprPtr> args);
ExprPtr make_min(std::vector<ExprPtr> args);
ExprPtr make_sum(ExprPtr left, ExprPtr right);
ExprPtr make_diff(ExprPtr left, ExprPtr right);
ExprPtr make_scale(double factor, ExprPtr operand);
ExprPtr make_neg(ExprPtr operand);

/// Throws SyntaxError (with position and expected tokens) or
/// NonlinearProduct.
ExprPtr parse_expr(std::string_view source);

/// Canonical text that parses back to a structurally identical tree.
std::string to_string(const Expr& e);

using Env = std::map<std::string, Scalar, std::less<>>;

/// Throws UnboundVariable, DivisionByEps, NegativePowerOfEps, NegationOfEps.
Scalar eval(const Expr& e, const Env& env);

/// Replaces bound variables with constants; no other rewriting.
ExprPtr substitute(const ExprPtr& e, const Env& bindings);

std::set<std::string, std::less<>> free_variables(const Expr& e);

bool is_identifier(std::string_view name);

}  // namespace tropical
