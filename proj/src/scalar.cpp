#include "tropical/scalar.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace tropical {

Scalar add(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

Scalar mul(Scalar a, Scalar b) {
  if (a.is_eps() || b.is_eps()) return eps;
  return Scalar(a.value() + b.value());
}

Scalar div(Scalar a, Scalar b) {
  if (b.is_eps()) throw Error(ErrorKind::DivisionByEps, "eps has no inverse");
  if (a.is_eps()) return eps;
  return Scalar(a.value() - b.value());
}

Scalar power(Scalar a, double r) {
  if (!std::isfinite(r))
    throw Error(ErrorKind::InvalidValue, "exponent must be finite");
  if (r == 0.0) return Scalar::zero();
  if (a.is_eps()) {
    if (r < 0.0)
      throw Error(ErrorKind::NegativePowerOfEps,
                  "eps raised to a negative power is +inf");
    return eps;
  }
  return Scalar(r * a.value());
}

std::string format(Scalar s) {
  if (s.is_eps()) return "eps";
  double v = s.value();
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

Scalar parse_scalar(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw SyntaxError(0, "a number or 'eps'", "empty scalar");
  auto last = text.find_last_not_of(" \t\r\n");
  std::string_view body = text.substr(first, last - first + 1);
  if (body == "eps" || body == "-inf" || body == "ε") return eps;

  std::string_view digits = body;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      !std::isfinite(value)) {
    throw SyntaxError(first, "a number or 'eps'",
                      "got '" + std::string(body) + "'");
  }
  return Scalar(value);
}

bool approx_equal(Scalar a, Scalar b, double tol) {
  if (a.is_eps() || b.is_eps()) return a.is_eps() && b.is_eps();
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace tropical
