#include "tropical/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropical/report.hpp"

namespace tropical::cli {
namespace {

// Raised for problems with the invocation itself (unreadable file, bad flag
// value); always exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::vector<std::string> params;
  std::uint64_t seed = 1;

  std::string path;
  std::string expr;
  unsigned k = 1;
  unsigned horizon = 500;
  double depth = 40.0;
  double tol = 1e-9;
  bool skip_approx = false;
  std::string x0;
  unsigned steps = 100;
  double floor = -50.0;
  double ceiling = 50.0;
  unsigned rate_window = 100;
  unsigned trace_every = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, "well-formed JSON", e.what());
  }
}

bool is_system_document(const Json& doc) {
  return doc.is_object() && doc.contains("updates");
}

SystemDef apply_params(SystemDef s, const std::vector<std::string>& params) {
  for (const std::string& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=value, got '" + p + "'");
    std::string name = p.substr(0, eq);
    Scalar value;
    try {
      value = parse_scalar(std::string_view(p).substr(eq + 1));
    } catch (const Error&) {
      throw UsageError("--param " + name + ": invalid value '" +
                       p.substr(eq + 1) + "'");
    }
    s = s.with_param(name, value);
  }
  return s;
}

SystemDef load_system_file(const Options& o) {
  return apply_params(load_system(read_file(o.path)), o.params);
}

Matrix load_matrix_file(const Options& o) {
  if (!o.params.empty())
    throw UsageError("--param applies to system files only");
  return load_matrix(read_file(o.path));
}

Vector parse_state(const std::string& text) {
  std::vector<Scalar> entries;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("--x0: empty coordinate");
    try {
      entries.push_back(parse_scalar(item.substr(b, e - b + 1)));
    } catch (const Error&) {
      throw UsageError("--x0: invalid coordinate '" + item + "'");
    }
  }
  if (entries.empty()) throw UsageError("--x0: expected v1,v2,...");
  return Vector(std::move(entries));
}

void emit(std::ostream& out, const Options& o, const Json& doc,
          const std::string& text) {
  if (o.json)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

void cmd_eig(const Options& o, std::ostream& out) {
  std::string text = read_file(o.path);
  Json doc = parse_document(text);
  Matrix a = Matrix::epsilon(1, 1);
  if (is_system_document(doc)) {
    SystemDef s = apply_params(load_system(text), o.params);
    a = jacobian(s).matrix;
  } else {
    if (!o.params.empty())
      throw UsageError("--param applies to system files only");
    a = matrix_from_json(doc);
  }
  SpectralReport r = analyze(a);
  emit(out, o, to_json(r), render_text(r));
}

void cmd_power(const Options& o, std::ostream& out) {
  Matrix p = power(load_matrix_file(o), o.k);
  emit(out, o, to_json(p), render_text(p));
}

void cmd_transient(const Options& o, std::ostream& out) {
  Transient t = transient(load_matrix_file(o), o.horizon);
  emit(out, o, to_json(t), render_text(t));
}

void cmd_parse(const Options& o, std::ostream& out) {
  ExprPtr e = parse_expr(o.expr);
  std::string canonical = to_string(*e);
  emit(out, o, Json{{"expr", canonical}, {"ast", to_json(*e)}},
       canonical + "\n");
}

void cmd_linearize(const Options& o, std::ostream& out) {
  SystemDef s = load_system_file(o);
  Jacobian j = jacobian(s);
  ApproximabilityOptions ao;
  ao.depth = o.depth;
  ao.seed = o.seed;
  ApproximabilityReport r = check_approximability(s, j.matrix, ao);
  emit(out, o, linearize_json(s, j, r), render_linearize_text(s, j, r));
}

void cmd_classify(const Options& o, std::ostream& out) {
  SystemDef s = load_system_file(o);
  ClassifyOptions co;
  co.tol = o.tol;
  co.check_approximability = !o.skip_approx;
  co.approx.seed = o.seed;
  Verdict v = classify(s, co);
  emit(out, o, to_json(v), render_text(v));
}

void cmd_simulate(const Options& o, std::ostream& out) {
  SystemDef s = load_system_file(o);
  Vector x0 = parse_state(o.x0);
  if (x0.dim() != s.dim())
    throw UsageError("--x0 has " + std::to_string(x0.dim()) +
                     " coordinates, system has " + std::to_string(s.dim()));
  SimulateOptions so;
  so.steps = o.steps;
  so.floor = o.floor;
  so.ceiling = o.ceiling;
  so.rate_window = o.rate_window;
  Trajectory t = simulate(s, x0, so);
  emit(out, o, simulate_json(t, o.trace_every),
       render_simulate_text(t, o.trace_every));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Stability analysis of ultradiscrete systems at the tropical origin",
               "tropstab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--param", o.params, "Override a system parameter (name=value)")
      ->take_all()
      ->allow_extra_args(false);
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  auto file_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.path, what)->required();
    sub->fallthrough();
  };

  CLI::App* eig = app.add_subcommand("eig", "Spectral report of a matrix or a system's Jacobian");
  file_arg(eig, "Matrix or system JSON file");

  CLI::App* pow = app.add_subcommand("power", "Tropical matrix power");
  file_arg(pow, "Matrix JSON file");
  pow->add_option("-k", o.k, "Exponent")->required();

  CLI::App* tr = app.add_subcommand("transient", "Transient and cyclicity of matrix powers");
  file_arg(tr, "Matrix JSON file");
  tr->add_option("--horizon", o.horizon, "Largest power examined");

  CLI::App* parse = app.add_subcommand("parse", "Parse an expression and echo it");
  parse->add_option("expr", o.expr, "Expression")->required();
  parse->fallthrough();

  CLI::App* lin = app.add_subcommand("linearize", "Tropical Jacobian and approximability check");
  file_arg(lin, "System JSON file");
  lin->add_option("--depth", o.depth, "Deepest sampling depth");

  CLI::App* cls = app.add_subcommand("classify", "Stability verdict at eps");
  file_arg(cls, "System JSON file");
  cls->add_option("--tol", o.tol, "Tolerance around a zero eigenvalue");
  cls->add_flag("--skip-approx-check", o.skip_approx, "Skip the approximability check");

  CLI::App* sim = app.add_subcommand("simulate", "Iterate the system from a start state");
  file_arg(sim, "System JSON file");
  sim->add_option("--x0", o.x0, "Start state v1,v2,...")->required();
  sim->add_option("--steps", o.steps, "Number of steps");
  sim->add_option("--floor", o.floor, "Treat states below this as eps");
  sim->add_option("--ceiling", o.ceiling, "Treat states above this as divergent");
  sim->add_option("--rate-window", o.rate_window, "Window for the growth rate");
  sim->add_option("--trace-every", o.trace_every, "Keep every k-th state in the trace")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tropstab: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  std::string source = cmd == parse ? std::string("expression") : o.path;
  try {
    if (cmd == eig) cmd_eig(o, out);
    else if (cmd == pow) cmd_power(o, out);
    else if (cmd == tr) cmd_transient(o, out);
    else if (cmd == parse) cmd_parse(o, out);
    else if (cmd == lin) cmd_linearize(o, out);
    else if (cmd == cls) cmd_classify(o, out);
    else cmd_simulate(o, out);
  } catch (const UsageError& e) {
    err << "tropstab: " << source << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "tropstab: " << source << ": " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kAnalysisError;
  } catch (const std::exception& e) {
    err << "tropstab: " << source << ": " << e.what() << "\n";
    return kAnalysisError;
  }
  return kOk;
}

}  // namespace tropical::cli
