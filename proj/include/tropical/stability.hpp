#pragma once

// Stability of the fixed point eps of x^{(t+1)} = f(x^{(t)}), decided by
// the sign of the maximum eigenvalue of the tropical Jacobian, plus a
// simulator to watch trajectories.

#include <optional>
#include <string>
#include <vector>

#include "tropical/linearize.hpp"
#include "tropical/spectral.hpp"
#include "tropical/system.hpp"

namespace tropical {

enum class VerdictKind { AsymptoticallyStable, Unstable, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// Empty when the Jacobian could not be formed.
  std::optional<Scalar> lambda;
  std::optional<std::string> reason;
  std::optional<Matrix> jacobian;
  std::optional<SpectralReport> report;
  std::optional<ApproximabilityReport> approximability;
  /// False when the approximability check was skipped.
  bool approximability_checked = true;
};

struct ClassifyOptions {
  double tol = 1e-9;
  bool check_approximability = true;
  ApproximabilityOptions approx;
};

/// λ < -tol (or λ = eps): asymptotically stable. λ > tol: unstable.
/// |λ| <= tol, a non-approximable entry or a failed approximability check:
/// inconclusive. Throws FixedPointViolation if f(eps) != eps.
Verdict classify(const SystemDef& s, const ClassifyOptions& options = {});

std::string_view to_string(VerdictKind kind);

enum class Outcome { ConvergedToEps, Diverged, Bounded, HorizonReached };

std::string_view to_string(Outcome outcome);

struct Trajectory {
  std::vector<Vector> states;
  Outcome outcome = Outcome::HorizonReached;
  std::optional<double> rate;

  std::size_t steps() const noexcept { return states.size() - 1; }
};

struct SimulateOptions {
  unsigned steps = 100;
  double floor = -50.0;
  double ceiling = 50.0;
  unsigned rate_window = 100;
};

/// Iterates f from x0. Stops with ConvergedToEps once max_i x_i < floor,
/// Diverged once max_i x_i > ceiling, Bounded when a state repeats an
/// earlier one within 1e-9. `rate` is filled when measure_rate succeeds.
Trajectory simulate(const SystemDef& s, const Vector& x0,
                    const SimulateOptions& options = {});

/// (M(T) - M(T - window)) / window with M(t) = max_i x_i^{(t)} and T the
/// last state. Throws InsufficientData.
double measure_rate(const Trajectory& traj, unsigned window = 100);

/// Runs x^{(t+1)} = A ⊗ x^{(t)} and checks x^{(t+σ)} = λ^{⊗σ} ⊗ x^{(t)}
/// for every t in [T, steps - σ]. Throws NotIrreducible.
bool verify_cyclicity_on_trajectory(const Matrix& a, const Vector& x0,
                                    unsigned steps);

}  // namespace tropical
