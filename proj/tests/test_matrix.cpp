#include "doctest.h"

#include <random>

#include "hrf/matrix.hpp"

using namespace hrf;

namespace {

Matrix m(std::vector<std::vector<Rational>> rows) { return Matrix::from_rows(rows); }

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

}  // namespace

TEST_CASE("rank, determinant, inverse over Q and F_3") {
  const Matrix g = m({{2, 1}, {1, 2}});
  CHECK(rank(g, Ring::rationals()) == 2);
  CHECK(determinant(g, Ring::rationals()) == 3);
  CHECK(rank(g, Ring::prime_field(3)) == 1);
  CHECK(determinant(g, Ring::prime_field(3)) == 0);
  CHECK(inverse(g, Ring::rationals()) == m({{Rational(2, 3), Rational(-1, 3)}, {Rational(-1, 3), Rational(2, 3)}}));
  CHECK_THROWS_AS(inverse(g, Ring::prime_field(3)), ArithmeticError);
}

TEST_CASE("kernel and solve") {
  const Matrix a = m({{1, 2, 3}, {2, 4, 6}});
  const Matrix k = kernel(a, Ring::rationals());
  CHECK(k.cols() == 2);
  CHECK((a * k).is_zero());
  CHECK_FALSE(solve(a, m({{1}, {3}}), Ring::rationals()).has_value());
  auto x = solve(a, m({{2}, {4}}), Ring::rationals());
  REQUIRE(x.has_value());
  CHECK(a * *x == m({{2}, {4}}));
}

TEST_CASE("column_basis keeps pivot columns in order") {
  const Matrix a = m({{1, 2, 0}, {0, 0, 1}});
  CHECK(independent_columns(a, Ring::rationals()) == std::vector<std::size_t>{0, 2});
  CHECK(column_basis(a, Ring::rationals()) == m({{1, 0}, {0, 1}}));
}

TEST_CASE("hconcat adopts rows of an empty left operand") {
  Matrix e(0, 0);
  Matrix b = m({{1}, {2}});
  CHECK(e.hconcat(b) == b);
}

TEST_CASE("property: inverse and rank-nullity on random matrices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix a = random_matrix(n, n, rng);
    const Ring q = Ring::rationals();
    if (sgn(determinant(a, q)) != 0) {
      CHECK(a * inverse(a, q) == Matrix::identity(n));
      CHECK(determinant(a.transpose(), q) == determinant(a, q));
    } else {
      CHECK(rank(a, q) < n);
    }
    Matrix b = random_matrix(n, n + 2, rng);
    CHECK(rank(b, q) + kernel(b, q).cols() == n + 2);
    const Ring f5 = Ring::prime_field(5);
    Matrix b5 = b.normalized(f5);
    CHECK(rank(b5, f5) + kernel(b5, f5).cols() == n + 2);
    CHECK(multiply(b5, kernel(b5, f5), f5).is_zero());
  }
}
