#pragma once

// Exponential metric on R_max^n: d(x, y) = max_i |e^{x_i} - e^{y_i}| with
// e^eps = 0, and the magnitude ‖x‖ = d(x, eps) = e^{max_i x_i}.

#include "tropical/matrix.hpp"

namespace tropical {

double distance(const Vector& x, const Vector& y);
double magnitude(const Vector& x);

/// d(x, y) / ‖s‖ evaluated as max_i |e^{x_i - m} - e^{y_i - m}| with
/// m = max_i s_i, so that deep points near eps neither underflow nor
/// overflow. Returns +inf if a shifted exponent overflows. Throws
/// DivisionByEps when s is the eps vector.
double scaled_distance(const Vector& x, const Vector& y, const Vector& s);

}  // namespace tropical
