#include "tropical/stability.hpp"

#include <algorithm>
#include <cmath>

namespace tropical {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::AsymptoticallyStable: return "stable";
    case VerdictKind::Unstable: return "unstable";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::ConvergedToEps: return "converged_to_eps";
    case Outcome::Diverged: return "diverged";
    case Outcome::Bounded: return "bounded";
    case Outcome::HorizonReached: return "horizon_reached";
  }
  return "horizon_reached";
}

Verdict classify(const SystemDef& s, const ClassifyOptions& options) {
  if (!eval_map(s, Vector::epsilon(s.dim())).is_epsilon())
    throw Error(ErrorKind::FixedPointViolation, "f(eps) is not eps");

  Verdict verdict;
  Jacobian jac{Matrix(1, 1), {}};
  try {
    jac = jacobian(s);
  } catch (const EntryError& e) {
    if (e.kind() != ErrorKind::NotApproximable &&
        e.kind() != ErrorKind::SlopeUnstable)
      throw;
    verdict.kind = VerdictKind::Inconclusive;
    verdict.reason = "entry (" + std::to_string(e.row()) + "," +
                     std::to_string(e.col()) + ") not approximable";
    verdict.approximability_checked = false;
    return verdict;
  }

  verdict.jacobian = jac.matrix;
  verdict.report = analyze(jac.matrix);
  const Scalar lambda = verdict.report->lambda;
  verdict.lambda = lambda;

  if (options.check_approximability) {
    verdict.approximability =
        check_approximability(s, jac.matrix, options.approx);
    if (!verdict.approximability->passed) {
      verdict.kind = VerdictKind::Inconclusive;
      verdict.reason = "approximability check failed";
      return verdict;
    }
  } else {
    verdict.approximability_checked = false;
  }

  // A circuit-free Jacobian has λ = eps, below every negative bound.
  if (lambda.is_eps() || lambda.value() < -options.tol) {
    verdict.kind = VerdictKind::AsymptoticallyStable;
  } else if (lambda.value() > options.tol) {
    verdict.kind = VerdictKind::Unstable;
  } else {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.reason = "zero eigenvalue within tolerance";
  }
  return verdict;
}

namespace {

constexpr double kRevisitTol = 1e-9;

}  // namespace

Trajectory simulate(const SystemDef& s, const Vector& x0,
                    const SimulateOptions& options) {
  if (x0.dim() != s.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "initial state has " + std::to_string(x0.dim()) +
                    " entries, system has " + std::to_string(s.dim()) +
                    " variables");
  if (!(options.floor < options.ceiling))
    throw Error(ErrorKind::InvalidValue, "floor must lie below ceiling");

  Trajectory traj;
  traj.states.push_back(x0);
  auto stopped = [&](const Vector& x) {
    Scalar top = x.max_entry();
    if (top < Scalar(options.floor)) {
      traj.outcome = Outcome::ConvergedToEps;
      return true;
    }
    if (top > Scalar(options.ceiling)) {
      traj.outcome = Outcome::Diverged;
      return true;
    }
    return false;
  };

  if (!stopped(x0)) {
    traj.outcome = Outcome::HorizonReached;
    for (unsigned t = 1; t <= options.steps; ++t) {
      Vector next = eval_map(s, traj.states.back());
      traj.states.push_back(next);
      if (stopped(next)) break;
      bool revisited = std::any_of(
          traj.states.begin(), traj.states.end() - 1,
          [&](const Vector& earlier) {
            return approx_equal(earlier, next, kRevisitTol);
          });
      if (revisited) {
        traj.outcome = Outcome::Bounded;
        break;
      }
    }
  }

  try {
    traj.rate = measure_rate(traj, options.rate_window);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientData) throw;
  }
  return traj;
}

double measure_rate(const Trajectory& traj, unsigned window) {
  if (window == 0)
    throw Error(ErrorKind::InsufficientData, "window must be positive");
  if (traj.states.size() < static_cast<std::size_t>(window) + 1)
    throw Error(ErrorKind::InsufficientData,
                "need " + std::to_string(window + 1) + " states, have " +
                    std::to_string(traj.states.size()));
  Scalar last = traj.states.back().max_entry();
  Scalar first = traj.states[traj.states.size() - 1 - window].max_entry();
  if (last.is_eps() || first.is_eps())
    throw Error(ErrorKind::InsufficientData, "state at eps in rate window");
  return (last.value() - first.value()) / static_cast<double>(window);
}

bool verify_cyclicity_on_trajectory(const Matrix& a, const Vector& x0,
                                    unsigned steps) {
  Transient tr = transient(a, std::max(steps, 500u));
  std::vector<Vector> states{x0};
  for (unsigned t = 1; t <= steps; ++t) states.push_back(mul(a, states.back()));

  const Scalar shift = power(tr.lambda, static_cast<double>(tr.sigma));
  for (std::size_t t = tr.T; t + tr.sigma <= steps; ++t)
    if (!approx_equal(states[t + tr.sigma], scale(shift, states[t]),
                      kCriticalTol))
      return false;
  return true;
}

}  // namespace tropical
