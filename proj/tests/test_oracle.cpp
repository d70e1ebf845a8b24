#include "doctest.h"

#include "hrf/oracle.hpp"

using namespace hrf;
using hrf::oracle::CharacterTable;

TEST_CASE("weyl_dim: classical values") {
  for (long n = 0; n <= 10; ++n) CHECK(oracle::weyl_dim(RootSystem::A1(), Weight{n}) == n + 1);
  CHECK(oracle::weyl_dim(RootSystem::A2(), Weight{1, 1}) == 8);
  CHECK(oracle::weyl_dim(RootSystem::A2(), Weight{1, 0}) == 3);
  CHECK(oracle::weyl_dim(RootSystem::A2(), Weight{2, 0}) == 6);
  CHECK(oracle::weyl_dim(RootSystem::B2(), Weight{1, 1}) == 16);
  // B2 with alpha_2 short: varpi_2 is the spin representation.
  CHECK(oracle::weyl_dim(RootSystem::B2(), Weight{0, 1}) == 4);
  CHECK(oracle::weyl_dim(RootSystem::B2(), Weight{1, 0}) == 5);
  CHECK(oracle::weyl_dim(RootSystem::G2(), Weight{0, 1}) == 7);
  CHECK(oracle::weyl_dim(RootSystem::G2(), Weight{1, 0}) == 14);
  CHECK(oracle::weyl_dim(RootSystem::from_type("A3"), Weight{1, 1, 1}) == 64);
  CHECK_THROWS_AS(oracle::weyl_dim(RootSystem::A1(), Weight{-1}), std::invalid_argument);
}

TEST_CASE("freudenthal: A1 strings and the A2 adjoint") {
  CHECK(oracle::freudenthal_character(RootSystem::A1(), Weight{3}) ==
        CharacterTable{{Weight{3}, 1}, {Weight{1}, 1}, {Weight{-1}, 1}, {Weight{-3}, 1}});

  auto adj = oracle::freudenthal_character(RootSystem::A2(), Weight{1, 1});
  CHECK(adj.size() == 7);
  CHECK(adj.at(Weight{0, 0}) == 2);
  for (const auto& w : {Weight{1, 1}, Weight{-1, 2}, Weight{2, -1}, Weight{-2, 1}, Weight{1, -2}, Weight{-1, -1}})
    CHECK(adj.at(w) == 1);

  // B2 adjoint (varpi_1 + ... ) is 10-dimensional with zero weight of multiplicity 2.
  auto b2 = oracle::freudenthal_character(RootSystem::B2(), Weight{0, 2});
  long total = 0;
  for (const auto& [w, m] : b2) total += m;
  CHECK(total == 10);
  CHECK(b2.at(Weight{0, 0}) == 2);
}

TEST_CASE("freudenthal is Weyl-group invariant") {
  for (const auto& [rs, lambda] : std::vector<std::pair<RootSystem, Weight>>{
           {RootSystem::A2(), Weight{2, 1}}, {RootSystem::B2(), Weight{1, 1}}, {RootSystem::G2(), Weight{1, 0}}}) {
    auto table = oracle::freudenthal_character(rs, lambda);
    CHECK(table.at(lambda) == 1);
    for (const auto& [w, m] : table)
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto it = table.find(rs.reflect(w, i));
        REQUIRE(it != table.end());
        CHECK(it->second == m);
      }
  }
}

TEST_CASE("sl2_gram closed form") {
  CHECK(oracle::sl2_gram(3, 2) == 12);
  CHECK(oracle::sl2_gram(3, 4) == 0);
  CHECK(oracle::sl2_gram(7, 0) == 1);
  CHECK(oracle::sl2_gram(5, 1) == 5);
  // G_l = l (n - l + 1) G_{l-1}
  for (long n = 0; n <= 8; ++n)
    for (long l = 1; l <= n + 2; ++l) CHECK(oracle::sl2_gram(n, l) == l * (n - l + 1) * oracle::sl2_gram(n, l - 1));
}

TEST_CASE("sl2 tilting fixture at p = 3") {
  auto fx = oracle::sl2_tilting_fixture(3);
  REQUIRE(fx.has_value());
  const auto& dims = fx->lattice.ambient.dims();
  CHECK(dims == Dimensions{{Weight{3}, 1}, {Weight{1}, 2}, {Weight{-1}, 2}, {Weight{-3}, 1}});
  CHECK(fx->index_exponent <= 2);
  CHECK(fx->index_exponent > 0);
  CHECK_THROWS_AS(oracle::sl2_tilting_fixture(2), CharacteristicTwoError);
}

TEST_CASE("sl2 tilting fixture: a zero index bound leaves only the standard lattice, which is not self-dual") {
  CHECK_FALSE(oracle::sl2_tilting_fixture(3, 0).has_value());
}
