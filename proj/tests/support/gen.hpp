#pragma once

// Random generators and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int integer(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

/// eps with probability p_eps, otherwise uniform in [lo, hi].
inline tropical::Scalar scalar(Rng& rng, double p_eps = 0.2, double lo = -10,
                               double hi = 10) {
  if (coin(rng, p_eps)) return tropical::eps;
  return tropical::Scalar(uniform(rng, lo, hi));
}

inline tropical::Scalar int_scalar(Rng& rng, double p_eps, int lo, int hi) {
  if (coin(rng, p_eps)) return tropical::eps;
  return tropical::Scalar(integer(rng, lo, hi));
}

inline tropical::Vector vector(Rng& rng, std::size_t n, double p_eps = 0.2,
                               double lo = -10, double hi = 10) {
  tropical::Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar(rng, p_eps, lo, hi);
  return v;
}

/// Each entry finite with probability `density`, uniform in [lo, hi].
inline tropical::Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols,
                               double density = 0.7, double lo = -3,
                               double hi = 3) {
  tropical::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = scalar(rng, 1.0 - density, lo, hi);
  return m;
}

inline tropical::Matrix int_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                   double density, int lo, int hi) {
  tropical::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = int_scalar(rng, 1.0 - density, lo, hi);
  return m;
}

/// Forces a Hamiltonian circuit through a random permutation so the result is
/// strongly connected; other entries follow `density`.
template <class Entry>
tropical::Matrix irreducible(Rng& rng, std::size_t n, double density,
                             Entry&& entry) {
  tropical::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) m(i, j) = entry();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    auto& e = m(perm[k], perm[(k + 1) % n]);
    if (e.is_eps()) e = entry();
  }
  return m;
}

inline tropical::Matrix irreducible_real(Rng& rng, std::size_t n,
                                         double density = 0.5) {
  return irreducible(rng, n, density,
                     [&] { return tropical::Scalar(uniform(rng, -3, 3)); });
}

inline tropical::Matrix irreducible_int(Rng& rng, std::size_t n,
                                        double density = 0.5) {
  return irreducible(rng, n, density,
                     [&] { return tropical::Scalar(integer(rng, -3, 3)); });
}

/// Maximum weight over all vertex sequences of exactly k edges, by
/// enumerating every sequence. Weights accumulate from the start vertex so
/// rounding matches a product evaluated left to right.
inline tropical::Scalar best_path(const tropical::Matrix& a, std::size_t from,
                                  std::size_t to, unsigned k) {
  tropical::Scalar best = tropical::eps;
  auto walk = [&](auto&& self, std::size_t v, unsigned left, double acc) -> void {
    if (left == 0) {
      if (v == to) best = tropical::add(best, tropical::Scalar(acc));
      return;
    }
    for (std::size_t w = 0; w < a.cols(); ++w)
      if (a(v, w).is_finite()) self(self, w, left - 1, acc + a(v, w).value());
  };
  walk(walk, from, k, 0.0);
  return best;
}

/// Every elementary circuit as a vertex list (first vertex is the smallest).
inline std::vector<std::vector<std::size_t>> circuits(const tropical::Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (std::size_t w = start; w < n; ++w) {
      if (a(v, w).is_eps()) continue;
      if (w == start) {
        out.push_back(path);
      } else if (!used[w]) {
        used[w] = true;
        path.push_back(w);
        self(self, start, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(extend, s, s);
  }
  return out;
}

inline double circuit_mean(const tropical::Matrix& a,
                           const std::vector<std::size_t>& c) {
  double w = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    w += a(c[k], c[(k + 1) % c.size()]).value();
  return w / static_cast<double>(c.size());
}

}  // namespace gen
