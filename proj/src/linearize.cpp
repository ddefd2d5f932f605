#include "tropical/linearize.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <random>

#include "tropical/metric.hpp"

namespace tropical {
namespace {

constexpr double kSlopeTol = 1e-9;
constexpr int kMaxDoublings = 60;
// Agreement between two consecutive slopes is re-checked against a probe
// this deep, so a breakpoint further out than the current sample is not
// mistaken for the asymptotic regime.
constexpr int kProbeDoublings = 45;
constexpr double kProbeTol = 1e-6;

Env eps_env(const std::vector<std::string>& vars) {
  Env env;
  for (const auto& v : vars) env[v] = eps;
  return env;
}

}  // namespace

DerivativeResult tropical_derivative(const Expr& g, std::string_view var,
                                     const std::vector<std::string>& vars,
                                     double s) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw Error(ErrorKind::InvalidValue, "sampling scale must be positive");
  if (std::find(vars.begin(), vars.end(), var) == vars.end())
    throw Error(ErrorKind::UnknownName,
                "'" + std::string(var) + "' is not a variable");

  Scalar at_origin = eval(g, eps_env(vars));
  if (at_origin.is_finite())
    throw Error(ErrorKind::FixedPointViolation,
                "g(eps) = " + format(at_origin) + ", expected eps");

  Env others = eps_env(vars);
  others.erase(others.find(var));
  ExprPtr ray = substitute(std::make_shared<const Expr>(g), others);
  const std::string name(var);
  auto sample = [&](double x) { return eval(*ray, Env{{name, Scalar(x)}}); };
  auto probe_x = -s * std::ldexp(1.0, kProbeDoublings);

  DerivativeResult result;
  double prev_slope = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k <= kMaxDoublings; ++k) {
    double x = -s * std::ldexp(1.0, k);
    Scalar gx = sample(x);
    result.samples.emplace_back(x, gx);
    if (k == 0) continue;

    auto [px, pg] = result.samples[result.samples.size() - 2];
    if (gx.is_eps() && pg.is_eps()) {
      if (k < kProbeDoublings && sample(probe_x).is_finite()) continue;
      result.value = eps;
      return result;
    }
    if (gx.is_eps() || pg.is_eps()) {
      prev_slope = std::numeric_limits<double>::quiet_NaN();
      continue;
    }

    double slope = (gx.value() - pg.value()) / (x - px);
    bool settled = std::abs(slope - prev_slope) <= kSlopeTol;
    prev_slope = slope;
    if (!settled) continue;
    if (k < kProbeDoublings) {
      Scalar deep = sample(probe_x);
      if (deep.is_eps() ||
          std::abs((deep.value() - gx.value()) / (probe_x - x) - slope) >
              kProbeTol)
        continue;
    }

    result.slope = slope;
    if (std::abs(slope - 1.0) <= kSlopeTol) {
      result.value = Scalar(gx.value() - x);
    } else if (slope > 1.0) {
      result.value = eps;
    } else {
      throw Error(ErrorKind::NotApproximable,
                  "slope " + format(Scalar(slope)) + " < 1 along " + name +
                      ", g ⊘ " + name + " diverges to +inf");
    }
    return result;
  }
  throw Error(ErrorKind::SlopeUnstable,
              "slope along " + name + " did not settle by x = -2^" +
                  std::to_string(kMaxDoublings));
}

Jacobian jacobian(const SystemDef& s) {
  const std::size_t n = s.dim();
  Vector at_origin = eval_map(s, Vector::epsilon(n));
  if (!at_origin.is_epsilon())
    throw Error(ErrorKind::FixedPointViolation, "f(eps) is not eps");

  Jacobian jac{Matrix(n, n), {}};
  jac.entries.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExprPtr fi = s.bound_update(i);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        jac.entries[i].push_back(tropical_derivative(*fi, s.vars()[j], s.vars()));
      } catch (const Error& e) {
        throw EntryError(e.kind(), i + 1, j + 1, e.what());
      }
      jac.matrix(i, j) = jac.entries[i].back().value;
    }
  }
  return jac;
}

ApproximabilityReport check_approximability(
    const SystemDef& s, const Matrix& j, const ApproximabilityOptions& options) {
  const std::size_t n = s.dim();
  if (!j.is_square() || j.rows() != n)
    throw Error(ErrorKind::ShapeMismatch, "Jacobian does not match the system");
  if (!(options.depth > 0.0))
    throw Error(ErrorKind::InvalidValue, "depth must be positive");

  std::vector<double> depths;
  for (double t = 10.0; t <= options.depth; t += 10.0) depths.push_back(-t);
  if (depths.empty() || depths.back() != -options.depth)
    depths.push_back(-options.depth);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);

  std::vector<std::uint64_t> supports;
  const std::uint64_t full = (n >= 64) ? ~0ull : (1ull << n) - 1;
  if (n <= 6) {
    for (std::uint64_t m = 1; m <= full; ++m) supports.push_back(m);
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(1, full);
    for (int k = 0; k < 64; ++k) supports.push_back(pick(rng));
    supports.push_back(full);
  }

  ApproximabilityReport report;
  for (std::uint64_t mask : supports) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n && i < 64; ++i)
      if (mask >> i & 1u) support.push_back(i);

    for (std::size_t r = 0; r <= options.rays_per_support; ++r) {
      RayResult ray;
      ray.support = support;
      for (std::size_t k = 0; k < support.size(); ++k)
        ray.offsets.push_back(r == 0 ? 0.0 : offset(rng));

      for (double t : depths) {
        Vector x = Vector::epsilon(n);
        for (std::size_t k = 0; k < support.size(); ++k)
          x[support[k]] = Scalar(ray.offsets[k] + t);
        double ratio = scaled_distance(eval_map(s, x), mul(j, x), x);
        ray.ratios.emplace_back(t, ratio);
      }

      double last = ray.deepest_ratio();
      bool decaying = ray.ratios.size() < 2 ||
                      last <= ray.ratios[ray.ratios.size() - 2].second + 1e-15;
      ray.passed = last <= kApproxThreshold && decaying;
      if (!ray.passed && !report.witness) report.witness = report.rays.size();
      report.passed = report.passed && ray.passed;
      report.rays.push_back(std::move(ray));
    }
  }
  return report;
}

Scalar upper_bound_envelope(const Vector& a, double alpha, const Vector& x) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error(ErrorKind::NonpositiveAlpha, "alpha must be a positive real");
  const double root = std::sqrt(alpha);
  Scalar near = mul(Scalar(std::log1p(root)), dot(a, x));
  Scalar far = mul(Scalar(std::log(alpha + root)), x.max_entry());
  return add(near, far);
}

}  // namespace tropical
