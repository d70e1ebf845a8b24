#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrf/scalar.hpp"

namespace hrf {

/// Dense row-major matrix of exact rationals.
///
/// The matrix itself carries no ring; arithmetic that must respect a ring
/// (prime-field reduction, inverses) takes the Ring explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Rational> values);

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  /// [this | other]; row counts must agree (an empty 0-column matrix adopts other's rows).
  Matrix hconcat(const Matrix& other) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Entrywise reduction into the ring (identity except for prime fields).
  Matrix normalized(const Ring& ring) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Result of Gauss-Jordan elimination over a field.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Exact linear algebra over the field ring.linear_algebra_field().
RowEchelon row_echelon(const Matrix& a, const Ring& ring);
std::size_t rank(const Matrix& a, const Ring& ring);
/// Column basis of the right kernel {x : a x = 0}.
Matrix kernel(const Matrix& a, const Ring& ring);
Rational determinant(const Matrix& a, const Ring& ring);
/// Throws ArithmeticError when singular.
Matrix inverse(const Matrix& a, const Ring& ring);
/// Some X with a X = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Ring& ring);
/// Product respecting prime-field reduction.
Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring);
/// Maximal linearly independent subset of the columns, in order.
std::vector<std::size_t> independent_columns(const Matrix& a, const Ring& ring);
/// Columns of a reduced to a basis of their span (pivot columns of a).
Matrix column_basis(const Matrix& a, const Ring& ring);

}  // namespace hrf
