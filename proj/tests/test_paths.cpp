#include "doctest.h"

#include "hrf/oracle.hpp"
#include "hrf/paths.hpp"

using namespace hrf;

namespace {

SimpleRootPath path(std::initializer_list<std::size_t> w) { return SimpleRootPath{w}; }

/// (b, a) through the adjoint operators: coefficient of the empty path in
/// epsilon_{b_l} ... epsilon_{b_1} (a).
Rational gram_by_epsilon(const RootSystem& rs, const Weight& lambda, const SimpleRootPath& a, const SimpleRootPath& b) {
  PathVector v{{a, Rational(1)}};
  for (std::size_t k = 0; k < b.length(); ++k) v = epsilon(rs, lambda, b.word[k], v);
  auto it = v.find(SimpleRootPath{});
  return it == v.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("A1 Gram equals the closed form") {
  const RootSystem a1 = RootSystem::A1();
  for (long n = 0; n <= 12; ++n) {
    for (long l = 0; l <= n + 2; ++l) {
      SimpleRootPath p{std::vector<std::size_t>(static_cast<std::size_t>(l), 0)};
      CHECK(gram_entry(a1, Weight{n}, p, p) == Rational(oracle::sl2_gram(n, l)));
    }
  }
}

TEST_CASE("paths enumerate permutations lexicographically") {
  const RootSystem a2 = RootSystem::A2();
  auto ps = enumerate_paths(a2, Weight{1, 1}, Weight{0, 0});
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == path({0, 1}));
  CHECK(ps[1] == path({1, 0}));
  CHECK(enumerate_paths(a2, Weight{1, 1}, Weight{2, 2}).empty());
  CHECK(enumerate_paths(a2, Weight{1, 1}, Weight{-1, -1}).size() == 6);
}

TEST_CASE("A2 rho zero-weight Gram is [[2,1],[1,2]]") {
  const Matrix g = gram_block(RootSystem::A2(), Weight{1, 1}, Weight{0, 0});
  CHECK(g == Matrix::from_rows({{2, 1}, {1, 2}}));
}

TEST_CASE("Gram recursion agrees with iterated epsilon") {
  for (const auto& [rs, lambda] : std::vector<std::pair<RootSystem, Weight>>{
           {RootSystem::A2(), Weight{1, 1}}, {RootSystem::A2(), Weight{2, 0}}, {RootSystem::B2(), Weight{1, 1}},
           {RootSystem::G2(), Weight{1, 0}}, {RootSystem::A2(), Weight{1, -1}}}) {
    PathGram pg(rs, lambda);
    for (long depth = 0; depth <= 3; ++depth) {
      // All weights at this depth below lambda.
      std::vector<std::vector<long>> contents{{}};
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::vector<std::vector<long>> next;
        for (auto c : contents)
          for (long k = 0; k <= depth; ++k) {
            auto d = c;
            d.push_back(k);
            next.push_back(d);
          }
        contents = next;
      }
      for (const auto& c : contents) {
        long total = 0;
        for (long x : c) total += x;
        if (total != depth) continue;
        const Weight mu = lambda - rs.from_root_coordinates(c);
        auto ps = enumerate_paths(rs, lambda, mu);
        for (const auto& a : ps)
          for (const auto& b : ps) {
            CHECK(Rational(pg.entry(a, b)) == gram_by_epsilon(rs, lambda, a, b));
            CHECK(pg.entry(a, b) == pg.entry(b, a));
          }
      }
    }
  }
}

TEST_CASE("standard module characters match Freudenthal") {
  for (long n = 0; n <= 8; ++n) {
    auto v = standard_module(RootSystem::A1(), Ring::rationals(), Weight{n});
    auto table = oracle::freudenthal_character(RootSystem::A1(), Weight{n});
    CHECK(v.module.total_dim() == static_cast<std::size_t>(n + 1));
    for (const auto& [w, m] : table) CHECK(v.module.dim(w) == static_cast<std::size_t>(m));
  }
  auto b2 = standard_module(RootSystem::B2(), Ring::rationals(), Weight{1, 1});
  CHECK(b2.module.total_dim() == 16);
  CHECK_FALSE(b2.truncated);
}

TEST_CASE("standard module over F_3 drops the zero weight") {
  auto v = standard_module(RootSystem::A2(), Ring::prime_field(3), Weight{1, 1}, 6);
  CHECK(v.module.total_dim() == 7);
  CHECK(v.module.dim(Weight{0, 0}) == 1);
  CHECK_FALSE(v.truncated);
}

TEST_CASE("standard module preconditions") {
  CHECK_THROWS_AS(standard_module(RootSystem::A1(), Ring::prime_field(3), Weight{2}), std::invalid_argument);
  CHECK_THROWS_AS(standard_module(RootSystem::A1(), Ring::rationals(), Weight{-2}), std::invalid_argument);
  // With a depth, non-dominant lambda gives the (infinite) Verma-like module truncated.
  auto v = standard_module(RootSystem::A1(), Ring::rationals(), Weight{-2}, 3);
  CHECK(v.truncated);
  CHECK(v.module.total_dim() == 4);
}

TEST_CASE("representatives and Gram") {
  auto v = standard_module(RootSystem::A2(), Ring::rationals(), Weight{1, 1});
  CHECK(v.representatives.at(Weight{0, 0}).size() == 2);
  CHECK(*v.form.block(Weight{0, 0}) == Matrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(*v.form.block(Weight{1, 1}) == Matrix::identity(1));
}
