#pragma once

// Spectral analysis of square max-plus matrices through the weighted digraph
// G(A): edge i -> j carries [A]_ij whenever that entry is finite.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

struct Edge {
  std::size_t from;  // 0-based
  std::size_t to;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WeightedDigraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::vector<std::vector<std::size_t>> successors() const;
};

WeightedDigraph build_digraph(const Matrix& a);

/// Strongly connected components (Tarjan); each component lists 0-based
/// vertices. Components come out in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& successors);

bool is_irreducible(const Matrix& a);

/// Maximum circuit mean by Karp's algorithm run on each SCC. eps if G(A)
/// has no circuit.
Scalar max_cycle_mean(const Matrix& a);

/// Exhaustive elementary-circuit enumeration; n <= 8 (TooLarge otherwise).
Scalar max_cycle_mean_bruteforce(const Matrix& a);

struct CriticalDigraph {
  std::vector<std::size_t> vertices;                      // sorted, 0-based
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, 0-based
};

/// Union of all circuits attaining the maximum mean. Throws EpsEigenvalue.
CriticalDigraph critical_digraph(const Matrix& a);

/// lcm over SCCs of the critical digraph of the gcd of their circuit
/// lengths. Throws EpsEigenvalue.
unsigned cyclicity(const Matrix& a);

/// A finite eigenvector: column j of ((-λ) ⊗ A)* for a critical vertex j.
/// Throws NotIrreducible.
Vector eigenvector(const Matrix& a);

struct Visualization {
  Vector x;
  /// Smallest λ + x_i - [A]_ij - x_j over non-critical edges; +inf if all
  /// edges are critical.
  double margin;
};

/// Strictly visualizing vector: [A]_ij + x_j = λ + x_i on critical edges and
/// strictly less on every other edge. Built as the arithmetic row mean of
/// ((-λ) ⊗ A)*, then verified (VerificationFailed on violation).
/// Throws NotIrreducible or EpsEigenvalue.
Visualization visualizing_vector(const Matrix& a);

struct Transient {
  unsigned T;
  Scalar lambda;
  unsigned sigma;
};

/// Smallest T <= horizon with A^{⊗(T+σ)} = λ^{⊗σ} ⊗ A^{⊗T}.
/// Throws NotIrreducible, EpsEigenvalue or HorizonExceeded.
Transient transient(const Matrix& a, unsigned horizon);

struct SpectralReport {
  Scalar lambda;
  bool irreducible = false;
  CriticalDigraph critical;
  std::optional<unsigned> cyclicity;
  std::optional<Vector> eigenvector;
  std::optional<Vector> visualizing;
  std::optional<unsigned> transient;
};

/// Everything above in one pass; transient is left empty when no T is
/// found within `horizon`.
SpectralReport analyze(const Matrix& a, unsigned horizon = 500);

/// Tolerance for "= 0" tests after normalizing by λ.
inline constexpr double kCriticalTol = 1e-9;

}  // namespace tropical
