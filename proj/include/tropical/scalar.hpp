#pragma once

// Arithmetic over the max-plus semiring R_max = R ∪ {eps}, eps = -inf.

#include <compare>
#include <limits>
#include <string>
#include <string_view>

#include "tropical/error.hpp"

namespace tropical {

/// An element of R_max. Finite values are never NaN or +inf; eps is stored
/// as IEEE -inf and compares exactly.
class Scalar {
 public:
  /// Default construction yields eps, the additive identity.
  constexpr Scalar() noexcept = default;

  /// Throws InvalidValue for NaN or +inf; -inf maps to eps.
  Scalar(double value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (value != value || value == std::numeric_limits<double>::infinity())
      throw Error(ErrorKind::InvalidValue,
                  "R_max holds finite reals and eps only");
  }

  static constexpr Scalar eps() noexcept { return Scalar(); }
  static Scalar zero() noexcept { return Scalar(0.0); }

  constexpr bool is_eps() const noexcept {
    return value_ == -std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_eps(); }

  /// Raw value; -inf for eps.
  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Scalar a, Scalar b) noexcept {
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(Scalar a,
                                                     Scalar b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = -std::numeric_limits<double>::infinity();
};

inline constexpr Scalar eps = Scalar::eps();

/// a ⊕ b = max(a, b).
Scalar add(Scalar a, Scalar b) noexcept;
/// a ⊗ b = a + b, eps absorbing.
Scalar mul(Scalar a, Scalar b);
/// a ⊘ b = a - b. Throws DivisionByEps when b is eps.
Scalar div(Scalar a, Scalar b);
/// a^{⊗r} = r·a. eps^0 is taken as 0, the empty product.
/// Throws NegativePowerOfEps for eps with r < 0.
Scalar power(Scalar a, double r);

/// Shortest decimal that round-trips, or "eps".
std::string format(Scalar s);
/// Accepts a decimal literal or one of `eps`, `-inf`, `ε`.
Scalar parse_scalar(std::string_view text);

/// Equality with eps exact and finite values within an absolute tolerance.
bool approx_equal(Scalar a, Scalar b, double tol);

}  // namespace tropical
