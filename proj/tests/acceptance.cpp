// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support/expr_gen.hpp"
#include "support/gen.hpp"
#include "tropical/cli.hpp"
#include "tropical/linearize.hpp"
#include "tropical/metric.hpp"
#include "tropical/spectral.hpp"
#include "tropical/stability.hpp"

using namespace tropical;
using Json = nlohmann::json;

namespace {

constexpr double kLambdaTol = 1e-9;
constexpr double kDerivativeTol = 1e-9;
constexpr double kRemarkRatioMin = 100.0;
constexpr double kKarpTol = 1e-9;
constexpr double kCyclicTol = 1e-9;
constexpr double kEnvelopeSlack = -1e-12;
constexpr double kVisualTol = 1e-9;
constexpr double kRateTol = 1e-9;

struct Check {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    detail = passed ? why : detail + "; " + why;
    passed = false;
  }
};

Json run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int rc = cli::run(args, out, err);
  if (code) *code = rc;
  if (rc != 0) throw std::runtime_error("exit " + std::to_string(rc) + ": " + err.str());
  return Json::parse(out.str());
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Check example1_reproduction() {
  Check o;
  struct Case {
    double a;
    const char* verdict;
  };
  const Case cases[] = {{-2, "stable"},   {-1.5, "stable"},   {-1.2, "stable"},
                        {-0.8, "unstable"}, {0, "unstable"},  {1, "unstable"},
                        {-1, "inconclusive"}};
  for (const Case& c : cases) {
    Json r = run_cli({"classify", "systems/example1.json", "--param", "a=" + fmt(c.a), "--json"});
    double expected = std::max((c.a + 1) / 2, -1.0);
    if (r["verdict"] != c.verdict)
      o.fail("a=" + fmt(c.a) + ": verdict " + r["verdict"].dump());
    else if (!r["lambda"].is_number() ||
             std::abs(r["lambda"].get<double>() - expected) > kLambdaTol)
      o.fail("a=" + fmt(c.a) + ": lambda " + r["lambda"].dump());
  }
  if (o.passed) o.detail = "7 parameter values match verdict and max((a+1)/2, -1)";
  return o;
}

Check example2_reproduction() {
  Check o;
  auto classify_with = [](double f1, double g1, double f2, double g2) {
    return run_cli({"classify", "systems/example2.json", "--param", "F1=" + fmt(f1), "--param",
                    "G1=" + fmt(g1), "--param", "F2=" + fmt(f2), "--param", "G2=" + fmt(g2),
                    "--json"});
  };
  Json stable = classify_with(-2, -1, -3, -1);
  Json unstable = classify_with(0, -1, -3, -1);
  if (stable["verdict"] != "stable") o.fail("(-2,-1,-3,-1): " + stable["verdict"].dump());
  if (unstable["verdict"] != "unstable") o.fail("(0,-1,-3,-1): " + unstable["verdict"].dump());
  const Json expected_stable = Json::array({Json::array({-1.0, "eps"}), Json::array({"eps", -2.0})});
  const Json expected_unstable = Json::array({Json::array({1.0, "eps"}), Json::array({"eps", -2.0})});
  if (stable["jacobian"] != expected_stable) o.fail("jacobian " + stable["jacobian"].dump());
  if (unstable["jacobian"] != expected_unstable) o.fail("jacobian " + unstable["jacobian"].dump());
  if (o.passed) o.detail = "stable/unstable with diagonal Jacobians diag(-1,-2), diag(1,-2)";
  return o;
}

Check remark_counterexample() {
  Check o;
  Json r = run_cli({"linearize", "systems/remark.json", "--json"});
  for (const Json& e : r["entries"]) {
    if (!e["value"].is_number() || std::abs(e["value"].get<double>()) > kDerivativeTol)
      o.fail("entry (" + e["i"].dump() + "," + e["j"].dump() + ") = " + e["value"].dump());
  }
  const Json& approx = r["approximability"];
  if (approx["passed"] != false) o.fail("approximability passed");
  const Json& w = approx["witness"];
  if (w.is_null()) {
    o.fail("no witness");
    return o;
  }
  if (w["support"] != Json::array({"x", "y"})) o.fail("witness support " + w["support"].dump());
  double ratio30 = -1;
  for (const Json& p : w["ratios"])
    if (p[0].get<double>() == -30) ratio30 = p[1].get<double>();
  if (!(ratio30 > kRemarkRatioMin)) o.fail("ratio at t=-30 is " + fmt(ratio30));
  if (o.passed)
    o.detail = "partials 0, check failed on diagonal, ratio(-30) = " + fmt(ratio30) +
               " (e^10 - 1 = " + fmt(std::exp(10.0) - 1) + ")";
  return o;
}

Check polynomial_derivatives() {
  Check o;
  const std::vector<std::string> vars{"x"};
  DerivativeResult d1 = tropical_derivative(*parse_expr("max(2+x, 5+2*x)"), "x", vars);
  if (!(d1.value == Scalar(2))) o.fail("max(2+x, 5+2*x) gave " + format(d1.value));
  DerivativeResult d2 = tropical_derivative(*parse_expr("5+2*x"), "x", vars);
  if (!d2.value.is_eps()) o.fail("5+2*x gave " + format(d2.value));
  try {
    DerivativeResult d3 = tropical_derivative(*parse_expr("(1/2)*x"), "x", vars);
    o.fail("(1/2)*x gave " + format(d3.value));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotApproximable) o.fail(std::string("(1/2)*x threw ") + e.what());
  }
  if (o.passed) o.detail = "2, eps, NotApproximable";
  return o;
}

Check karp_oracle() {
  Check o;
  gen::Rng rng(1005);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 5));
    Matrix a = gen::matrix(rng, n, n, 0.7, -3, 3);
    Scalar karp = max_cycle_mean(a), brute = max_cycle_mean_bruteforce(a);
    bool ok = karp.is_eps() ? brute.is_eps()
                            : brute.is_finite() && std::abs(karp.value() - brute.value()) <= kKarpTol;
    if (!ok) ++failures;
  }
  if (failures) o.fail(std::to_string(failures) + " of 200 disagree");
  else o.detail = "200 of 200 agree";
  return o;
}

Check cyclicity_theorem() {
  Check o;
  gen::Rng rng(1006);
  unsigned max_t = 0;
  for (int i = 0; i < 50 && o.passed; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 4));
    Matrix a = gen::irreducible_int(rng, n);
    Transient t = transient(a, 500);
    max_t = std::max(max_t, t.T);
    Scalar growth = power(t.lambda, static_cast<double>(t.sigma));
    for (unsigned s = t.T; s <= t.T + 3 * t.sigma; ++s)
      if (!approx_equal(power(a, s + t.sigma), scale(growth, power(a, s)), kCyclicTol)) {
        o.fail("matrix " + std::to_string(i) + " fails at t=" + std::to_string(s));
        break;
      }
  }
  if (o.passed) o.detail = "50 of 50 verified, largest T = " + std::to_string(max_t);
  return o;
}

Check envelope_property() {
  Check o;
  gen::Rng rng(1007);
  double worst = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 4));
    Vector a = gen::vector(rng, n, 0.3, -5, 5);
    Vector x = gen::vector(rng, n, 0.2, -30, 5);
    if (x.is_epsilon()) x[0] = Scalar(gen::uniform(rng, -30, 5));
    double alpha = std::exp(gen::uniform(rng, -10, 2));
    double m = x.max_entry().value();
    Scalar ax = dot(a, x);
    double base = ax.is_eps() ? 0.0 : std::exp(ax.value() - m);
    double shifted = base + gen::uniform(rng, -1, 1) * alpha;
    if (shifted <= 0) continue;  // g = eps is bounded trivially
    double g = m + std::log(shifted);
    Scalar bound = upper_bound_envelope(a, alpha, x);
    double slack = bound.is_eps() ? -INFINITY : bound.value() - g;
    worst = std::min(worst, slack);
  }
  if (worst < kEnvelopeSlack) o.fail("minimum slack " + fmt(worst));
  else o.detail = "1000 instances, minimum slack " + fmt(worst);
  return o;
}

Check visualization_lemma() {
  Check o;
  gen::Rng rng(1008);
  int failures = 0;
  double min_margin = INFINITY;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 5));
    Matrix a = gen::irreducible_real(rng, n);
    try {
      Visualization v = visualizing_vector(a);
      double lambda = max_cycle_mean(a).value();
      CriticalDigraph crit = critical_digraph(a);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (a(r, c).is_eps()) continue;
          double gap = lambda + v.x[r].value() - a(r, c).value() - v.x[c].value();
          bool critical = std::find(crit.edges.begin(), crit.edges.end(),
                                    std::pair{r, c}) != crit.edges.end();
          if (critical ? std::abs(gap) > kVisualTol : !(gap > kVisualTol)) ++failures;
          if (!critical) min_margin = std::min(min_margin, gap);
        }
    } catch (const Error& e) {
      ++failures;
    }
  }
  if (failures) o.fail(std::to_string(failures) + " violations");
  else o.detail = "100 of 100 hold, smallest off-critical margin " + fmt(min_margin);
  return o;
}

Check rate_agreement() {
  Check o;
  SystemDef base = load_system(read("systems/example1.json"));
  SimulateOptions options;
  options.steps = 400;
  for (double a : {-3.0, 1.0}) {
    double lambda = std::max((a + 1) / 2, -1.0);
    Trajectory t = simulate(base.with_param("a", Scalar(a)), Vector{Scalar(0), Scalar(0)}, options);
    std::string where = "a=" + fmt(a) + ": " + std::string(to_string(t.outcome)) + " after " +
                        std::to_string(t.steps()) + " steps";
    try {
      double rate = measure_rate(t, options.rate_window);
      if (std::abs(rate - lambda) > kRateTol)
        o.fail(where + ", rate " + fmt(rate) + " != " + fmt(lambda));
    } catch (const Error& e) {
      o.fail(where + ", " + e.what());
    }
  }
  if (o.passed) o.detail = "rates -1 and +1";
  return o;
}

Check path_power_identity() {
  Check o;
  gen::Rng rng(1010);
  int checked = 0;
  for (int i = 0; i < 200 && o.passed; ++i) {
    std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 4));
    Matrix a = gen::matrix(rng, n, n, 0.7, -3, 3);
    for (unsigned k = 0; k <= 5; ++k) {
      Matrix p = power(a, k);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!(p(r, c) == gen::best_path(a, r, c, k))) {
            o.fail("entry mismatch for k=" + std::to_string(k));
            return o;
          }
    }
    Scalar lambda = max_cycle_mean(a);
    if (lambda.is_finite() && lambda.value() > 0) continue;
    Matrix partial = Matrix::identity(n), term = Matrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
      term = mul(term, a);
      partial = add(partial, term);
    }
    if (!(add(partial, mul(term, a)) == partial)) o.fail("series grows past n-1 terms");
    ++checked;
  }
  if (o.passed)
    o.detail = "200 matrices exact for k <= 5, " + std::to_string(checked) +
               " with lambda <= 0 stabilize";
  return o;
}

Check parser_robustness() {
  Check o;
  gen::Rng rng(1011);
  int asts = 0, rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string src = gen::fuzz_input(rng);
    try {
      ExprPtr e = parse_expr(src);
      if (!(*parse_expr(to_string(*e)) == *e)) o.fail("round-trip mismatch on " + src);
      ++asts;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SyntaxError && e.kind() != ErrorKind::NonlinearProduct)
        o.fail(std::string("unexpected ") + e.what());
      ++rejected;
    }
  }
  for (const char* path : {"systems/example1.json", "systems/example2.json",
                           "systems/example3.json", "systems/remark.json"}) {
    SystemDef s = load_system(read(path));
    SystemDef again = load_system(dump_system(s));
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!(*again.updates()[i] == *s.updates()[i])) o.fail(std::string(path) + " does not round-trip");
  }
  if (o.passed)
    o.detail = std::to_string(asts) + " ASTs, " + std::to_string(rejected) +
               " typed rejections, 4 bundled files round-trip";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Check()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "example 1 verdicts and eigenvalues", 1, example1_reproduction},
      {2, "example 2 verdicts and diagonal Jacobian", 1, example2_reproduction},
      {3, "counterexample fails approximability", 1, remark_counterexample},
      {4, "tropical polynomial derivatives", 1, polynomial_derivatives},
      {5, "Karp matches circuit enumeration", 5, karp_oracle},
      {6, "eventual periodicity of powers", 10, cyclicity_theorem},
      {7, "upper-bound envelope holds", 2, envelope_property},
      {8, "strictly visualizing vectors", 5, visualization_lemma},
      {9, "growth rate from (0,0) equals eigenvalue", 1, rate_agreement},
      {10, "powers are path maxima, series stabilizes", 5, path_power_identity},
      {11, "parser fuzzing and file round-trip", 30, parser_robustness},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("threw ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && seconds > c.budget_seconds)
      o.fail("took " + fmt(seconds) + " s, budget " + fmt(c.budget_seconds) + " s");
    if (!o.passed) ++failed;
    std::printf("%s criterion %2d: %s (%.3f s) %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name,
                seconds, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
