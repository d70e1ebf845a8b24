#include "hrf/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hrf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::set_column(std::size_t c, std::span<const Rational> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
  return m;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (cols_ == 0) return other;
  if (other.cols_ == 0) return *this;
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (sgn(o(k, c)) != 0) m(r, c) += a * o(k, c);
      }
    }
  }
  return m;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m(*this);
  for (auto& x : m.data_) x *= s;
  return m;
}

std::vector<Rational> Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::normalized(const Ring& ring) const {
  if (ring.kind() != RingKind::PrimeField) return *this;
  Matrix m(*this);
  for (auto& x : m.data_) x = ring.normalize(x);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << format_rational((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

RowEchelon row_echelon(const Matrix& a, const Ring& ring) {
  const Ring field = ring.linear_algebra_field();
  RowEchelon out{a.normalized(field), {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && field.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Rational inv = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!field.is_zero(m(row, c))) m(r, c) = field.sub(m(r, c), field.mul(f, m(row, c)));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& a, const Ring& ring) { return row_echelon(a, ring).pivots.size(); }

Matrix kernel(const Matrix& a, const Ring& ring) {
  const Ring field = ring.linear_algebra_field();
  RowEchelon e = row_echelon(a, ring);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = field.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, a.cols());
}

Rational determinant(const Matrix& a, const Ring& ring) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const Ring field = ring.linear_algebra_field();
  Matrix m = a.normalized(field);
  const std::size_t n = m.rows();
  Rational det = field.from_int(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && field.is_zero(m(piv, col))) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    Rational inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (field.is_zero(m(r, col))) continue;
      Rational f = field.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = field.sub(m(r, c), field.mul(f, m(col, c)));
    }
  }
  return det;
}

Matrix inverse(const Matrix& a, const Ring& ring) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RowEchelon e = row_echelon(a.hconcat(Matrix::identity(n)), ring);
  if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1)) {
    throw ArithmeticError("singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Ring& ring) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  RowEchelon e = row_echelon(aug, ring);
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, n + c);
  }
  return x;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring) { return (a * b).normalized(ring); }

std::vector<std::size_t> independent_columns(const Matrix& a, const Ring& ring) {
  return row_echelon(a, ring).pivots;
}

Matrix column_basis(const Matrix& a, const Ring& ring) {
  auto idx = independent_columns(a, ring);
  return a.normalized(ring.linear_algebra_field()).select_columns(idx);
}

}  // namespace hrf
