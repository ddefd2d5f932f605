#include "tropical/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace tropical {
namespace {

void require_square(const Matrix& a) {
  if (!a.is_square())
    throw Error(ErrorKind::NotSquare, std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
}

Scalar require_finite_lambda(const Matrix& a) {
  Scalar lambda = max_cycle_mean(a);
  if (lambda.is_eps())
    throw Error(ErrorKind::EpsEigenvalue, "G(A) has no circuit");
  return lambda;
}

void require_irreducible(const Matrix& a) {
  if (!is_irreducible(a))
    throw Error(ErrorKind::NotIrreducible, "G(A) is not strongly connected");
}

// (-λ) ⊗ A and its Kleene star. Every circuit of the normalized matrix
// weighs at most zero up to rounding in λ.
std::pair<Matrix, Matrix> normalized_star(const Matrix& a, Scalar lambda) {
  Matrix b = scale(Scalar(-lambda.value()), a);
  Matrix star = kleene_star(b, kCriticalTol);
  return {std::move(b), std::move(star)};
}

}  // namespace

std::vector<std::vector<std::size_t>> WeightedDigraph::successors() const {
  std::vector<std::vector<std::size_t>> succ(n);
  for (const Edge& e : edges) succ[e.from].push_back(e.to);
  return succ;
}

WeightedDigraph build_digraph(const Matrix& a) {
  require_square(a);
  WeightedDigraph g;
  g.n = a.rows();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (a(i, j).is_finite()) g.edges.push_back({i, j, a(i, j).value()});
  return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& successors) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = successors.size();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  // Explicit DFS frames: (vertex, position in its successor list).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < successors[v].size()) {
        std::size_t w = successors[v][pos++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

bool is_irreducible(const Matrix& a) {
  WeightedDigraph g = build_digraph(a);
  if (g.n == 1) return true;
  return strongly_connected_components(g.successors()).size() == 1;
}

Scalar max_cycle_mean(const Matrix& a) {
  WeightedDigraph g = build_digraph(a);
  auto components = strongly_connected_components(g.successors());
  std::vector<std::size_t> local(g.n);
  std::vector<std::size_t> owner(g.n);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t k = 0; k < components[c].size(); ++k) {
      local[components[c][k]] = k;
      owner[components[c][k]] = c;
    }

  constexpr double kNone = -std::numeric_limits<double>::infinity();
  double best = kNone;
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::vector<Edge> internal;
    for (const Edge& e : g.edges)
      if (owner[e.from] == c && owner[e.to] == c)
        internal.push_back({local[e.from], local[e.to], e.weight});
    if (internal.empty()) continue;

    // Karp: walk[m][v] is the heaviest walk of exactly m edges from vertex 0
    // of the component to v.
    const std::size_t k = components[c].size();
    std::vector<std::vector<double>> walk(k + 1, std::vector<double>(k, kNone));
    walk[0][0] = 0.0;
    for (std::size_t m = 1; m <= k; ++m)
      for (const Edge& e : internal)
        if (walk[m - 1][e.from] != kNone)
          walk[m][e.to] = std::max(walk[m][e.to], walk[m - 1][e.from] + e.weight);

    for (std::size_t v = 0; v < k; ++v) {
      if (walk[k][v] == kNone) continue;
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < k; ++m)
        if (walk[m][v] != kNone)
          worst = std::min(worst, (walk[k][v] - walk[m][v]) /
                                      static_cast<double>(k - m));
      best = std::max(best, worst);
    }
  }
  return Scalar(best);
}

Scalar max_cycle_mean_bruteforce(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n > 8)
    throw Error(ErrorKind::TooLarge,
                "circuit enumeration is limited to n <= 8, got " +
                    std::to_string(n));

  double best = -std::numeric_limits<double>::infinity();
  std::vector<bool> used(n, false);
  // Circuits are enumerated once each, rooted at their smallest vertex.
  auto extend = [&](auto&& self, std::size_t start, std::size_t v,
                    double weight, std::size_t length) -> void {
    for (std::size_t w = start; w < n; ++w) {
      Scalar e = a(v, w);
      if (e.is_eps()) continue;
      if (w == start) {
        best = std::max(best, (weight + e.value()) /
                                  static_cast<double>(length + 1));
      } else if (!used[w]) {
        used[w] = true;
        self(self, start, w, weight + e.value(), length + 1);
        used[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = true;
    extend(extend, s, s, 0.0, 0);
    used[s] = false;
  }
  return Scalar(best);
}

CriticalDigraph critical_digraph(const Matrix& a) {
  Scalar lambda = require_finite_lambda(a);
  auto [b, star] = normalized_star(a, lambda);
  Matrix plus = mul(b, star);
  const std::size_t n = a.rows();

  CriticalDigraph critical;
  for (std::size_t i = 0; i < n; ++i)
    if (plus(i, i).is_finite() && std::abs(plus(i, i).value()) <= kCriticalTol)
      critical.vertices.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar through = mul(b(i, j), star(j, i));
      if (through.is_finite() && std::abs(through.value()) <= kCriticalTol)
        critical.edges.emplace_back(i, j);
    }
  return critical;
}

unsigned cyclicity(const Matrix& a) {
  CriticalDigraph critical = critical_digraph(a);
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [i, j] : critical.edges) succ[i].push_back(j);

  unsigned result = 1;
  for (const auto& component : strongly_connected_components(succ)) {
    std::vector<long> level(n, -1);
    std::vector<bool> inside(n, false);
    for (std::size_t v : component) inside[v] = true;

    std::queue<std::size_t> frontier;
    level[component.front()] = 0;
    frontier.push(component.front());
    while (!frontier.empty()) {
      std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t w : succ[v])
        if (inside[w] && level[w] < 0) {
          level[w] = level[v] + 1;
          frontier.push(w);
        }
    }

    long g = 0;
    bool has_edge = false;
    for (std::size_t v : component)
      for (std::size_t w : succ[v])
        if (inside[w]) {
          has_edge = true;
          g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
        }
    // Critical vertices always lie on a critical circuit.
    if (!has_edge) continue;
    result = std::lcm(result, static_cast<unsigned>(g));
  }
  return result;
}

Vector eigenvector(const Matrix& a) {
  require_irreducible(a);
  Scalar lambda = max_cycle_mean(a);
  if (lambda.is_eps()) return Vector(a.rows(), Scalar::zero());  // [[eps]]

  auto [b, star] = normalized_star(a, lambda);
  CriticalDigraph critical = critical_digraph(a);
  Vector x = star.column(critical.vertices.front());
  if (!approx_equal(mul(a, x), scale(lambda, x), kCriticalTol))
    throw Error(ErrorKind::VerificationFailed,
                "A ⊗ x differs from λ ⊗ x beyond tolerance");
  return x;
}

Visualization visualizing_vector(const Matrix& a) {
  require_irreducible(a);
  Scalar lambda = require_finite_lambda(a);
  auto [b, star] = normalized_star(a, lambda);
  const std::size_t n = a.rows();

  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += star(i, j).value();
    x[i] = Scalar(sum / static_cast<double>(n));
  }

  CriticalDigraph critical = critical_digraph(a);
  auto is_critical = [&](std::size_t i, std::size_t j) {
    return std::binary_search(critical.edges.begin(), critical.edges.end(),
                              std::make_pair(i, j));
  };

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_eps()) continue;
      double slack = lambda.value() + x[i].value() -
                     (a(i, j).value() + x[j].value());
      if (is_critical(i, j)) {
        if (std::abs(slack) > kCriticalTol)
          throw Error(ErrorKind::VerificationFailed,
                      "critical edge (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") has slack " +
                          format(Scalar(slack)));
      } else {
        if (slack <= kCriticalTol)
          throw Error(ErrorKind::VerificationFailed,
                      "edge (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is not strictly below λ");
        margin = std::min(margin, slack);
      }
    }
  return {std::move(x), margin};
}

Transient transient(const Matrix& a, unsigned horizon) {
  require_irreducible(a);
  Scalar lambda = require_finite_lambda(a);
  const unsigned sigma = cyclicity(a);
  const Scalar shift = power(lambda, static_cast<double>(sigma));

  // powers[t] = A^{⊗t}, grown on demand.
  std::vector<Matrix> powers{Matrix::identity(a.rows()), a};
  for (unsigned t = 1; t <= horizon; ++t) {
    while (powers.size() <= t + sigma) powers.push_back(mul(powers.back(), a));
    if (approx_equal(powers[t + sigma], scale(shift, powers[t]), kCriticalTol))
      return {t, lambda, sigma};
  }
  throw Error(ErrorKind::HorizonExceeded,
              "no transient found within " + std::to_string(horizon) +
                  " steps");
}

SpectralReport analyze(const Matrix& a, unsigned horizon) {
  SpectralReport report;
  report.lambda = max_cycle_mean(a);
  report.irreducible = is_irreducible(a);
  if (report.lambda.is_finite()) {
    report.critical = critical_digraph(a);
    report.cyclicity = cyclicity(a);
  }
  if (report.irreducible) {
    report.eigenvector = eigenvector(a);
    if (report.lambda.is_finite()) {
      report.visualizing = visualizing_vector(a).x;
      try {
        report.transient = transient(a, horizon).T;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HorizonExceeded) throw;
      }
    }
  }
  return report;
}

}  // namespace tropical
