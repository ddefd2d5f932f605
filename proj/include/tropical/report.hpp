#pragma once

// JSON and plain-text renderings of every analysis result, plus the matrix
// file format {"rows": r, "cols": c, "entries": [[...], ...]}.

#include <string>
#include <string_view>

#include "json.hpp"
#include "tropical/expr.hpp"
#include "tropical/linearize.hpp"
#include "tropical/spectral.hpp"
#include "tropical/stability.hpp"
#include "tropical/system.hpp"

namespace tropical {

using Json = nlohmann::ordered_json;

/// `cols` may be omitted for square matrices. Entries are numbers or one of
/// "eps", "-inf", "ε". Throws SyntaxError or ShapeMismatch.
Matrix load_matrix(std::string_view document);
Matrix matrix_from_json(const Json& doc);

Json to_json(Scalar s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json entries_json(const Matrix& m);
Json to_json(const SpectralReport& r);
Json to_json(const Transient& t);
Json to_json(const Expr& e);
Json linearize_json(const SystemDef& s, const Jacobian& j,
                    const ApproximabilityReport& approx);
Json to_json(const Verdict& v);
Json simulate_json(const Trajectory& traj, unsigned trace_every = 1);

std::string render_text(const Matrix& m, std::string_view indent = "");
std::string render_text(const SpectralReport& r);
std::string render_text(const Transient& t);
std::string render_linearize_text(const SystemDef& s, const Jacobian& j,
                                  const ApproximabilityReport& approx);
std::string render_text(const Verdict& v);
std::string render_simulate_text(const Trajectory& traj,
                                 unsigned trace_every = 1);

/// One-line summary such as "asymptotically stable (lambda = -1 < 0)".
std::string verdict_summary(const Verdict& v);

}  // namespace tropical
