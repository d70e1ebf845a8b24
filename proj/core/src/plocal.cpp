#include "hrf/plocal.hpp"

#include <algorithm>

namespace hrf::plocal {

namespace {

Rational power_of(unsigned long p, long v) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(v < 0 ? -v : v));
  return v < 0 ? Rational(Integer(1), q) : Rational(q);
}

/// Representative r of x + p^v Z_(p) in Z[1/p] with 0 <= r < p^v.
Rational residue(const Rational& x, long v, unsigned long p) {
  if (sgn(x) == 0) return 0;
  const long w = valuation(x, p);
  const long s = std::max(0L, -w);
  if (v + s <= 0) return 0;
  const Rational y = x * power_of(p, s);  // in Z_(p)
  Integer mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(v + s));
  Integer den_inv;
  Integer den = y.get_den();
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (y.get_num() * den_inv) % mod;
  if (sgn(r) < 0) r += mod;
  return Rational(r) / power_of(p, s);
}

void axpy_column(Matrix& m, std::size_t dst, const Rational& c, std::size_t src) {
  if (sgn(c) == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= c * m(r, src);
}

void swap_columns(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Matrix lattice_basis(const Matrix& generators, unsigned long p) {
  Matrix w = generators;
  std::size_t done = 0;
  std::vector<std::pair<std::size_t, long>> pivots;  // (row, valuation) per finished column
  for (std::size_t row = 0; row < w.rows() && done < w.cols(); ++row) {
    std::optional<std::size_t> best;
    long best_v = 0;
    for (std::size_t c = done; c < w.cols(); ++c) {
      if (sgn(w(row, c)) == 0) continue;
      long v = valuation(w(row, c), p);
      if (!best || v < best_v) {
        best = c;
        best_v = v;
      }
    }
    if (!best) continue;
    swap_columns(w, done, *best);
    for (std::size_t c = done + 1; c < w.cols(); ++c) axpy_column(w, c, w(row, c) / w(row, done), done);
    // Scale the pivot column by a unit so the pivot becomes p^v.
    const Rational unit = power_of(p, best_v) / w(row, done);
    for (std::size_t r = 0; r < w.rows(); ++r) w(r, done) *= unit;
    // Reduce the entries of this row in earlier columns modulo p^v.
    for (std::size_t c = 0; c < done; ++c) {
      const Rational x = w(row, c);
      const Rational q = (x - residue(x, best_v, p)) / power_of(p, best_v);
      axpy_column(w, c, q, done);
    }
    pivots.emplace_back(row, best_v);
    ++done;
  }
  std::vector<std::size_t> keep(done);
  for (std::size_t i = 0; i < done; ++i) keep[i] = i;
  return w.select_columns(keep);
}

std::vector<long> elementary_divisor_valuations(const Matrix& a, unsigned long p) {
  Matrix w = a;
  std::vector<long> out;
  const std::size_t n = std::min(w.rows(), w.cols());
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    long best_v = 0;
    for (std::size_t r = k; r < w.rows(); ++r) {
      for (std::size_t c = k; c < w.cols(); ++c) {
        if (sgn(w(r, c)) == 0) continue;
        long v = valuation(w(r, c), p);
        if (!best || v < best_v) {
          best = {r, c};
          best_v = v;
        }
      }
    }
    if (!best) break;
    swap_rows(w, k, best->first);
    swap_columns(w, k, best->second);
    for (std::size_t r = k + 1; r < w.rows(); ++r) {
      const Rational f = w(r, k) / w(k, k);
      if (sgn(f) == 0) continue;
      for (std::size_t c = k; c < w.cols(); ++c) w(r, c) -= f * w(k, c);
    }
    for (std::size_t c = k + 1; c < w.cols(); ++c) w(k, c) = 0;
    out.push_back(best_v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix saturation(const Matrix& span_columns, unsigned long p) {
  const Ring q = Ring::rationals();
  Matrix v = column_basis(span_columns, q);
  const std::size_t n = v.rows();
  const std::size_t r = v.cols();
  // Unimodular row operations U with U v = [T; 0]; the saturated lattice is
  // U^{-1}(Z_(p)^r + 0), i.e. the first r columns of U^{-1}.
  Matrix uinv = Matrix::identity(n);
  for (std::size_t j = 0; j < r; ++j) {
    std::optional<std::size_t> best;
    long best_v = 0;
    for (std::size_t i = j; i < n; ++i) {
      if (sgn(v(i, j)) == 0) continue;
      long val = valuation(v(i, j), p);
      if (!best || val < best_v) {
        best = i;
        best_v = val;
      }
    }
    swap_rows(v, j, *best);
    swap_columns(uinv, j, *best);
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rational c = v(k, j) / v(j, j);
      if (sgn(c) == 0) continue;
      for (std::size_t col = 0; col < r; ++col) v(k, col) -= c * v(j, col);
      // Row_k -= c Row_j  <=>  U^{-1} column_j += c column_k.
      for (std::size_t row = 0; row < n; ++row) uinv(row, j) += c * uinv(row, k);
    }
  }
  std::vector<std::size_t> first(r);
  for (std::size_t i = 0; i < r; ++i) first[i] = i;
  return lattice_basis(uinv.select_columns(first), p);
}

std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& vectors, unsigned long p) {
  auto x = solve(basis, vectors, Ring::rationals());
  if (!x || !is_integral(*x, p)) return std::nullopt;
  return x;
}

Matrix basis_from_generators(const Matrix& generators, unsigned long p) {
  Matrix nf = lattice_basis(generators, p);
  if (nf.cols() == 0) return nf;
  auto x = solve(nf, generators, Ring::rationals());
  const Ring fp = Ring::prime_field(p);
  auto idx = independent_columns(x->normalized(fp), fp);
  return generators.select_columns(idx);
}

bool same_lattice(const Matrix& a, const Matrix& b, unsigned long p) {
  return lattice_basis(a, p) == lattice_basis(b, p);
}

bool is_integral(const Matrix& a, unsigned long p) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (valuation(Integer(a(r, c).get_den()), p) != 0) return false;
  return true;
}

long min_valuation(const Matrix& a, unsigned long p) {
  long best = kInfiniteValuation;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) best = std::min(best, valuation(a(r, c), p));
  return best;
}

}  // namespace hrf::plocal
