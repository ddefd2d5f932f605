#pragma once

// Tropical linearization at the tropical origin eps = (eps, ..., eps).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropical/expr.hpp"
#include "tropical/matrix.hpp"
#include "tropical/system.hpp"

namespace tropical {

struct DerivativeResult {
  /// D_{i,eps} g, possibly eps.
  Scalar value;
  /// Asymptotic slope of g along the ray x(i); empty when g is eps there.
  std::optional<double> slope;
  /// (x_i, g(x(i))) pairs, shallowest first.
  std::vector<std::pair<double, Scalar>> samples;
};

/// lim_{x_i -> eps} g(x(i)) ⊘ x_i, found by sampling x_i = -s·2^k until the
/// slope of g along the ray settles. `g` may only reference `vars`.
///
/// Throws FixedPointViolation if g(eps) != eps, NotApproximable when the
/// slope is below 1 (limit +inf), SlopeUnstable when no slope settles.
DerivativeResult tropical_derivative(const Expr& g, std::string_view var,
                                     const std::vector<std::string>& vars,
                                     double s = 1.0);

struct Jacobian {
  Matrix matrix;
  /// entries[i][j] is D_{j,eps} f_i.
  std::vector<std::vector<DerivativeResult>> entries;
};

/// [J]_ij = D_{j,eps} f_i. Entry failures surface as EntryError carrying
/// the 1-based (i, j).
Jacobian jacobian(const SystemDef& s);

struct RayResult {
  std::vector<std::size_t> support;  // 0-based coordinates that are finite
  std::vector<double> offsets;       // per support coordinate
  /// (t, d(f(x(t)), J ⊗ x(t)) / ‖x(t)‖) for t = -10, -20, ..., -depth.
  std::vector<std::pair<double, double>> ratios;
  bool passed = false;

  double deepest_ratio() const { return ratios.back().second; }
};

struct ApproximabilityReport {
  bool passed = true;
  std::vector<RayResult> rays;
  std::optional<std::size_t> witness;  // index into rays
};

struct ApproximabilityOptions {
  double depth = 40.0;
  std::size_t rays_per_support = 8;
  std::uint64_t seed = 1;
};

inline constexpr double kApproxThreshold = 1e-6;

/// Samples rays x_i(t) = u_i + t (i in S, eps elsewhere) over every support
/// S and checks that d(f(x), J ⊗ x) / ‖x‖ has decayed below 1e-6 at the
/// deepest t without rising over the last step. The zero-offset ray is
/// always sampled for each support. A failure is conclusive; a pass is
/// evidence only.
ApproximabilityReport check_approximability(
    const SystemDef& s, const Matrix& j,
    const ApproximabilityOptions& options = {});

/// log(1+√α) ⊗ a ⊗ x ⊕ log(α+√α) ⊗ 0̄ ⊗ x: an upper bound on g(x) whenever
/// d(g(x), a ⊗ x) <= α‖x‖. Throws DimensionMismatch, NonpositiveAlpha.
Scalar upper_bound_envelope(const Vector& a, double alpha, const Vector& x);

}  // namespace tropical
