#include "tropical/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tropical {
namespace {

double exp_or_zero(Scalar s, double shift) {
  return s.is_eps() ? 0.0 : std::exp(s.value() - shift);
}

double shifted_distance(const Vector& x, const Vector& y, double shift) {
  if (x.dim() != y.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  double d = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    double ex = exp_or_zero(x[i], shift);
    double ey = exp_or_zero(y[i], shift);
    if (std::isinf(ex) || std::isinf(ey))
      return std::numeric_limits<double>::infinity();
    d = std::max(d, std::abs(ex - ey));
  }
  return d;
}

}  // namespace

double distance(const Vector& x, const Vector& y) {
  return shifted_distance(x, y, 0.0);
}

double magnitude(const Vector& x) { return exp_or_zero(x.max_entry(), 0.0); }

double scaled_distance(const Vector& x, const Vector& y, const Vector& s) {
  Scalar m = s.max_entry();
  if (m.is_eps())
    throw Error(ErrorKind::DivisionByEps, "magnitude of the eps vector is 0");
  return shifted_distance(x, y, m.value());
}

}  // namespace tropical
