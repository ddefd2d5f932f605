#pragma once

// A map f: R_max^n -> R_max^n given by n update expressions over named
// variables and parameters, and its JSON file format:
//
//   {"vars": ["x", "y"], "params": {"a": -3},
//    "updates": ["max(x, a) + y", "max(1 + x, -1 + y)"]}

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropical/expr.hpp"
#include "tropical/matrix.hpp"

namespace tropical {

class SystemDef {
 public:
  /// Validates arity, name collisions and name resolution.
  SystemDef(std::vector<std::string> vars,
            std::vector<std::pair<std::string, Scalar>> params,
            std::vector<ExprPtr> updates);

  std::size_t dim() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<std::pair<std::string, Scalar>>& params() const noexcept {
    return params_;
  }
  const std::vector<ExprPtr>& updates() const noexcept { return updates_; }

  /// Copy with one parameter replaced. Throws UnknownName if undeclared.
  SystemDef with_param(std::string_view name, Scalar value) const;

  /// Update i with every parameter replaced by its value.
  ExprPtr bound_update(std::size_t i) const;

  Env param_env() const;

 private:
  std::vector<std::string> vars_;
  std::vector<std::pair<std::string, Scalar>> params_;
  std::vector<ExprPtr> updates_;
};

/// Parses the JSON system format. Malformed JSON or schema violations are
/// SyntaxErrors; also throws UnknownName and ArityMismatch.
SystemDef load_system(std::string_view document);

/// Inverse of load_system (canonical expression text, 2-space indent).
std::string dump_system(const SystemDef& s);

/// f(x), componentwise. Throws DimensionMismatch plus evaluation errors.
Vector eval_map(const SystemDef& s, const Vector& x);

}  // namespace tropical
