#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

/// Column vector in R_max^n, n >= 1.
class Vector {
 public:
  explicit Vector(std::size_t dim, Scalar fill = eps);
  explicit Vector(std::vector<Scalar> entries);
  Vector(std::initializer_list<Scalar> entries);

  static Vector epsilon(std::size_t dim) { return Vector(dim); }

  std::size_t dim() const noexcept { return entries_.size(); }
  Scalar operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// max_i x_i, i.e. 0̄ ⊗ x.
  Scalar max_entry() const noexcept;
  bool is_epsilon() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix over R_max.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = eps);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix epsilon(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix add(const Matrix& a, const Matrix& b);
Vector add(const Vector& a, const Vector& b);
Matrix mul(const Matrix& a, const Matrix& b);
Vector mul(const Matrix& a, const Vector& x);
/// Row vector a times column vector x: ⊕_i a_i ⊗ x_i.
Scalar dot(const Vector& a, const Vector& x);
Matrix scale(Scalar alpha, const Matrix& a);
Vector scale(Scalar alpha, const Vector& x);

/// A^{⊗k}; A^{⊗0} is the identity. Throws NotSquare.
Matrix power(const Matrix& a, unsigned k);

/// Maximum path weight closure I ⊕ A ⊕ A^{⊗2} ⊕ ... for a matrix whose
/// circuits all weigh at most `tol`. Throws PositiveCycle otherwise.
Matrix kleene_star(const Matrix& a, double tol = 1e-12);

/// Entrywise comparison: eps exact, finite within `tol`.
bool approx_equal(const Matrix& a, const Matrix& b, double tol);
bool approx_equal(const Vector& a, const Vector& b, double tol);

/// Entrywise a <= b.
bool leq(const Matrix& a, const Matrix& b);
bool leq(const Vector& a, const Vector& b);

}  // namespace tropical
