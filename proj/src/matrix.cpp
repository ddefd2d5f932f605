#include "tropical/matrix.hpp"

#include <algorithm>
#include <string>

namespace tropical {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
}

void require_square(const Matrix& a) {
  if (!a.is_square())
    throw Error(ErrorKind::NotSquare, std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
}

}  // namespace

Vector::Vector(std::size_t dim, Scalar fill) : entries_(dim, fill) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "empty vector");
}

Vector::Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw Error(ErrorKind::DimensionMismatch, "empty vector");
}

Vector::Vector(std::initializer_list<Scalar> entries)
    : Vector(std::vector<Scalar>(entries)) {}

Scalar Vector::max_entry() const noexcept {
  Scalar m = eps;
  for (Scalar s : entries_) m = add(m, s);
  return m;
}

bool Vector::is_epsilon() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar s) { return s.is_eps(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorKind::ShapeMismatch, "matrix needs at least one entry");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorKind::ShapeMismatch, "matrix needs at least one entry");
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::ShapeMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries_.size()));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw Error(ErrorKind::ShapeMismatch, "matrix needs at least one entry");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::zero();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(std::vector<Scalar>(entries_.begin() + i * cols_,
                                    entries_.begin() + (i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add(a(i, j), b(i, j));
  return c;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  Vector c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = add(a[i], b[i]);
  return c;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::ShapeMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar aik = a(i, k);
      if (aik.is_eps()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = add(c(i, j), mul(aik, b(k, j)));
    }
  }
  return c;
}

Vector mul(const Matrix& a, const Vector& x) {
  if (a.cols() != x.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "matrix has " + std::to_string(a.cols()) +
                    " columns, vector has " + std::to_string(x.dim()) +
                    " entries");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] = add(y[i], mul(a(i, j), x[j]));
  return y;
}

Scalar dot(const Vector& a, const Vector& x) {
  if (a.dim() != x.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(x.dim()));
  Scalar s = eps;
  for (std::size_t i = 0; i < a.dim(); ++i) s = add(s, mul(a[i], x[i]));
  return s;
}

Matrix scale(Scalar alpha, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = mul(alpha, a(i, j));
  return c;
}

Vector scale(Scalar alpha, const Vector& x) {
  Vector y(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) y[i] = mul(alpha, x[i]);
  return y;
}

Matrix power(const Matrix& a, unsigned k) {
  require_square(a);
  Matrix result = Matrix::identity(a.rows());
  if (k <= 8) {
    for (unsigned i = 0; i < k; ++i) result = mul(result, a);
    return result;
  }
  Matrix base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Matrix kleene_star(const Matrix& a, double tol) {
  require_square(a);
  const std::size_t n = a.rows();
  // Floyd-Warshall in (max, +): after pivot k, closure(i,j) is the best path
  // using intermediates among the first k vertices.
  Matrix closure = a;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Scalar ik = closure(i, k);
      if (ik.is_eps()) continue;
      for (std::size_t j = 0; j < n; ++j)
        closure(i, j) = add(closure(i, j), mul(ik, closure(k, j)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (closure(i, i).is_finite() && closure(i, i).value() > tol)
      throw Error(ErrorKind::PositiveCycle,
                  "circuit through vertex " + std::to_string(i + 1) +
                      " has weight " + format(closure(i, i)));
  }
  return add(Matrix::identity(n), closure);
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!approx_equal(a.entries()[i], b.entries()[i], tol)) return false;
  return true;
}

bool approx_equal(const Vector& a, const Vector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!approx_equal(a[i], b[i], tol)) return false;
  return true;
}

bool leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a.entries()[i] > b.entries()[i]) return false;
  return true;
}

bool leq(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace tropical
