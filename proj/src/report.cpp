#include "tropical/report.hpp"

#include <algorithm>
#include <sstream>

namespace tropical {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw SyntaxError(0, what, "invalid matrix file");
}

Scalar scalar_from_json(const Json& v) {
  if (v.is_number()) return Scalar(v.get<double>());
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  schema_error("a number or \"eps\" entry");
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple_text(const Vector& v) {
  std::vector<std::string> parts;
  for (Scalar s : v) parts.push_back(format(s));
  return "(" + join(parts, ", ") + ")";
}

std::string indent_lines(const std::string& text, std::string_view indent) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out += std::string(indent) + line + "\n";
  return out;
}

Json support_names(const SystemDef& s, const RayResult& ray) {
  Json names = Json::array();
  for (std::size_t i : ray.support) names.push_back(s.vars()[i]);
  return names;
}

Json ray_json(const SystemDef& s, const RayResult& ray) {
  Json ratios = Json::array();
  for (auto [t, r] : ray.ratios) ratios.push_back(Json::array({t, r}));
  return Json{{"support", support_names(s, ray)},
              {"offsets", ray.offsets},
              {"ratios", ratios}};
}

std::string ray_text(const SystemDef& s, const RayResult& ray) {
  std::vector<std::string> names;
  for (std::size_t i : ray.support) names.push_back(s.vars()[i]);
  std::vector<std::string> offsets;
  for (double u : ray.offsets) offsets.push_back(format(Scalar(u)));
  std::string out = "  witness: support {" + join(names, ", ") +
                    "}, offsets (" + join(offsets, ", ") + ")\n";
  for (auto [t, r] : ray.ratios) {
    std::ostringstream line;
    line.precision(6);
    line << "    t = " << format(Scalar(t)) << ": ratio " << r << "\n";
    out += line.str();
  }
  return out;
}

}  // namespace

Matrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("a JSON object");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    schema_error("\"entries\": an array of rows");
  const Json& rows_json = doc["entries"];
  std::size_t rows = rows_json.size();
  if (doc.contains("rows")) {
    if (!doc["rows"].is_number_unsigned()) schema_error("\"rows\": an integer");
    rows = doc["rows"].get<std::size_t>();
  }
  std::size_t cols = rows;
  if (doc.contains("cols")) {
    if (!doc["cols"].is_number_unsigned()) schema_error("\"cols\": an integer");
    cols = doc["cols"].get<std::size_t>();
  }
  if (rows_json.size() != rows)
    throw Error(ErrorKind::ShapeMismatch,
                "\"rows\" is " + std::to_string(rows) + " but " +
                    std::to_string(rows_json.size()) + " rows given");
  std::vector<Scalar> entries;
  for (const Json& row : rows_json) {
    if (!row.is_array()) schema_error("each row as an array");
    if (row.size() != cols)
      throw Error(ErrorKind::ShapeMismatch,
                  "expected " + std::to_string(cols) + " entries per row");
    for (const Json& v : row) entries.push_back(scalar_from_json(v));
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix load_matrix(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, "well-formed JSON", e.what());
  }
  return matrix_from_json(doc);
}

Json to_json(Scalar s) {
  if (s.is_eps()) return "eps";
  return s.value() == 0.0 ? 0.0 : s.value();
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Scalar s : v) out.push_back(to_json(s));
  return out;
}

Json entries_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

Json to_json(const Matrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_json(m)}};
}

Json to_json(const SpectralReport& r) {
  Json vertices = Json::array();
  for (std::size_t v : r.critical.vertices) vertices.push_back(v + 1);
  Json edges = Json::array();
  for (auto [i, j] : r.critical.edges) edges.push_back(Json::array({i + 1, j + 1}));
  auto optional_vector = [](const std::optional<Vector>& v) -> Json {
    return v ? to_json(*v) : Json(nullptr);
  };
  auto optional_uint = [](const std::optional<unsigned>& v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  return Json{{"lambda", to_json(r.lambda)},
              {"irreducible", r.irreducible},
              {"critical_vertices", vertices},
              {"critical_edges", edges},
              {"cyclicity", optional_uint(r.cyclicity)},
              {"eigenvector", optional_vector(r.eigenvector)},
              {"visualizing", optional_vector(r.visualizing)},
              {"transient", optional_uint(r.transient)}};
}

Json to_json(const Transient& t) {
  return Json{{"T", t.T}, {"lambda", to_json(t.lambda)}, {"cyclicity", t.sigma}};
}

Json to_json(const Expr& e) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        auto args = [](const std::vector<ExprPtr>& xs) {
          Json out = Json::array();
          for (const auto& x : xs) out.push_back(to_json(*x));
          return out;
        };
        if constexpr (std::is_same_v<T, ast::Const>) {
          return Json{{"const", to_json(n.value)}};
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          return Json{{"var", n.name}};
        } else if constexpr (std::is_same_v<T, ast::Max>) {
          return Json{{"max", args(n.args)}};
        } else if constexpr (std::is_same_v<T, ast::Min>) {
          return Json{{"min", args(n.args)}};
        } else if constexpr (std::is_same_v<T, ast::Sum>) {
          return Json{{"sum", Json::array({to_json(*n.left), to_json(*n.right)})}};
        } else if constexpr (std::is_same_v<T, ast::Diff>) {
          return Json{{"diff", Json::array({to_json(*n.left), to_json(*n.right)})}};
        } else if constexpr (std::is_same_v<T, ast::Scale>) {
          return Json{{"scale", Json{{"factor", n.factor},
                                     {"operand", to_json(*n.operand)}}}};
        } else {
          return Json{{"neg", to_json(*n.operand)}};
        }
      },
      e.node);
}

Json linearize_json(const SystemDef& s, const Jacobian& j,
                    const ApproximabilityReport& approx) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < j.entries.size(); ++r)
    for (std::size_t c = 0; c < j.entries[r].size(); ++c) {
      const DerivativeResult& d = j.entries[r][c];
      entries.push_back(Json{{"i", r + 1},
                             {"j", c + 1},
                             {"value", to_json(d.value)},
                             {"slope", d.slope ? Json(*d.slope) : Json(nullptr)}});
    }
  Json witness = approx.witness ? ray_json(s, approx.rays[*approx.witness])
                                : Json(nullptr);
  return Json{{"jacobian", entries_json(j.matrix)},
              {"entries", entries},
              {"approximability", Json{{"passed", approx.passed},
                                       {"rays", approx.rays.size()},
                                       {"witness", witness}}}};
}

Json to_json(const Verdict& v) {
  return Json{
      {"verdict", std::string(to_string(v.kind))},
      {"lambda", v.lambda ? to_json(*v.lambda) : Json(nullptr)},
      {"reason", v.reason ? Json(*v.reason) : Json(nullptr)},
      {"confidence", v.approximability_checked ? "checked" : "unchecked"},
      {"jacobian", v.jacobian ? entries_json(*v.jacobian) : Json(nullptr)},
      {"spectral", v.report ? to_json(*v.report) : Json(nullptr)}};
}

Json simulate_json(const Trajectory& traj, unsigned trace_every) {
  Json trace = Json::array();
  const std::size_t last = traj.states.size() - 1;
  for (std::size_t t = 0; t <= last; ++t)
    if (t % std::max(trace_every, 1u) == 0 || t == last)
      trace.push_back(to_json(traj.states[t]));
  return Json{{"outcome", std::string(to_string(traj.outcome))},
              {"steps", traj.steps()},
              {"rate", traj.rate ? Json(*traj.rate) : Json(nullptr)},
              {"trace", trace}};
}

std::string render_text(const Matrix& m, std::string_view indent) {
  std::size_t width = 0;
  for (Scalar s : m.entries()) width = std::max(width, format(s).size());
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string cell = format(m(i, j));
      out += std::string(width - cell.size() + (j ? 2 : 0), ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

std::string render_text(const SpectralReport& r) {
  std::vector<std::string> vertices, edges;
  for (std::size_t v : r.critical.vertices) vertices.push_back(std::to_string(v + 1));
  for (auto [i, j] : r.critical.edges)
    edges.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  auto opt = [](const auto& v, auto&& show) -> std::string {
    return v ? show(*v) : std::string("none");
  };
  auto number = [](unsigned u) { return std::to_string(u); };
  std::string out;
  out += "lambda: " + format(r.lambda) + "\n";
  out += std::string("irreducible: ") + (r.irreducible ? "true" : "false") + "\n";
  out += "critical vertices: {" + join(vertices, ", ") + "}\n";
  out += "critical edges: {" + join(edges, ", ") + "}\n";
  out += "cyclicity: " + opt(r.cyclicity, number) + "\n";
  out += "eigenvector: " + opt(r.eigenvector, tuple_text) + "\n";
  out += "visualizing: " + opt(r.visualizing, tuple_text) + "\n";
  out += "transient: " + opt(r.transient, number) + "\n";
  return out;
}

std::string render_text(const Transient& t) {
  return "T: " + std::to_string(t.T) + "\nlambda: " + format(t.lambda) +
         "\ncyclicity: " + std::to_string(t.sigma) + "\n";
}

std::string render_linearize_text(const SystemDef& s, const Jacobian& j,
                                  const ApproximabilityReport& approx) {
  std::string out = "jacobian:\n" + render_text(j.matrix, "  ");
  out += "derivatives:\n";
  for (std::size_t r = 0; r < j.entries.size(); ++r)
    for (std::size_t c = 0; c < j.entries[r].size(); ++c) {
      const DerivativeResult& d = j.entries[r][c];
      out += "  [" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
             "] D_" + s.vars()[c] + " f" + std::to_string(r + 1) + " = " +
             format(d.value) + "  (slope " +
             (d.slope ? format(Scalar(*d.slope)) : std::string("n/a")) + ")\n";
    }
  out += "approximability: " + std::string(approx.passed ? "passed" : "failed") +
         " (" + std::to_string(approx.rays.size()) + " rays)\n";
  if (approx.witness) out += ray_text(s, approx.rays[*approx.witness]);
  return out;
}

std::string verdict_summary(const Verdict& v) {
  std::string lambda = v.lambda ? format(*v.lambda) : std::string("n/a");
  switch (v.kind) {
    case VerdictKind::AsymptoticallyStable:
      if (v.lambda && v.lambda->is_eps())
        return "asymptotically stable (lambda = eps)";
      return "asymptotically stable (lambda = " + lambda + " < 0)";
    case VerdictKind::Unstable:
      return "unstable (lambda = " + lambda + " > 0)";
    case VerdictKind::Inconclusive:
      return "inconclusive (" + v.reason.value_or("no verdict") +
             (v.lambda ? ", lambda = " + lambda : std::string()) + ")";
  }
  return "inconclusive";
}

std::string render_text(const Verdict& v) {
  std::string out = "verdict: " + verdict_summary(v) + "\n";
  out += std::string("approximability: ") +
         (!v.approximability_checked ? "not checked"
          : v.approximability && v.approximability->passed ? "passed"
                                                            : "failed") +
         "\n";
  if (v.jacobian) out += "jacobian:\n" + render_text(*v.jacobian, "  ");
  if (v.report) out += "spectral:\n" + indent_lines(render_text(*v.report), "  ");
  return out;
}

std::string render_simulate_text(const Trajectory& traj, unsigned trace_every) {
  std::string out = "outcome: " + std::string(to_string(traj.outcome)) + "\n";
  out += "steps: " + std::to_string(traj.steps()) + "\n";
  out += "rate: " + (traj.rate ? format(Scalar(*traj.rate)) : std::string("n/a")) +
         "\n";
  out += "trace:\n";
  const std::size_t last = traj.states.size() - 1;
  for (std::size_t t = 0; t <= last; ++t)
    if (t % std::max(trace_every, 1u) == 0 || t == last)
      out += "  t=" + std::to_string(t) + ": " + tuple_text(traj.states[t]) + "\n";
  return out;
}

}  // namespace tropical
