#include "doctest.h"

#include "hrf/io.hpp"
#include "support.hpp"

using namespace hrf;
using hrf::io::json;

TEST_CASE("rationals and matrices round-trip as strings") {
  CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::rational_from_json(json(7)) == 7);
  CHECK(io::rational_from_json(json("10/4")) == Rational(5, 2));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), io::FormatError);
  Matrix a = Matrix::from_rows({{1, Rational(1, 2)}, {0, -3}});
  CHECK(io::matrix_from_json(io::to_json(a), 2, 2) == a);
  CHECK_THROWS_AS(io::matrix_from_json(io::to_json(a), 2, 3), io::FormatError);
}

TEST_CASE("ring specs") {
  CHECK(io::parse_ring_spec("Q") == Ring::rationals());
  CHECK(io::parse_ring_spec("F3") == Ring::prime_field(3));
  CHECK(io::parse_ring_spec("Z5") == Ring::p_local(5));
  CHECK_THROWS_AS(io::parse_ring_spec("F2"), CharacteristicTwoError);
  CHECK_THROWS_AS(io::parse_ring_spec("Z2"), CharacteristicTwoError);
  CHECK_THROWS_AS(io::parse_ring_spec("F4"), io::FormatError);
  CHECK_THROWS_AS(io::parse_ring_spec("R"), io::FormatError);
  CHECK_THROWS_AS(io::parse_ring_spec("F3x"), io::FormatError);
}

TEST_CASE("graded module document round-trip") {
  auto v = standard_module(RootSystem::A2(), Ring::rationals(), Weight{1, 1});
  const json j = io::module_to_json(v.module, &v.form);
  auto doc = io::module_from_json(j);
  REQUIRE(doc.form.has_value());
  CHECK(doc.module.dims() == v.module.dims());
  CHECK(doc.form->gram == v.form.gram);
  CHECK(io::dump(io::module_to_json(doc.module, &*doc.form)) == io::dump(j));
  CHECK(j.at("ring").at("kind") == "Q");
  CHECK(j.at("operators").contains("alpha_2"));
}

TEST_CASE("F_3 module keeps reduced entries") {
  auto v = standard_module(RootSystem::A2(), Ring::prime_field(3), Weight{1, 1}, 6);
  const json j = io::module_to_json(v.module, &v.form);
  auto doc = io::module_from_json(j);
  CHECK(doc.module.ring() == Ring::prime_field(3));
  CHECK(io::dump(io::module_to_json(doc.module, &*doc.form)) == io::dump(j));
}

TEST_CASE("lattice document round-trip") {
  auto [m, form] = weyl_lattice(RootSystem::A1(), Weight{3}, 5);
  const json j = io::lattice_to_json(m, &form);
  CHECK(j.at("p") == 5);
  auto doc = io::lattice_from_json(j);
  CHECK(doc.lattice.basis == m.basis);
  CHECK(io::dump(io::lattice_to_json(doc.lattice, &*doc.form)) == io::dump(j));
}

TEST_CASE("malformed documents") {
  auto v = standard_module(RootSystem::A1(), Ring::rationals(), Weight{1});
  json j = io::module_to_json(v.module, &v.form);

  json bad = j;
  bad.erase("weights");
  CHECK_THROWS_AS(io::module_from_json(bad), io::FormatError);

  bad = j;
  bad["operators"]["alpha_3"] = json::array();
  CHECK_THROWS_AS(io::module_from_json(bad), io::FormatError);

  bad = j;
  bad["operators"]["alpha_1"][0]["matrix"] = json::array({json::array({"1", "2"})});
  CHECK_THROWS_AS(io::module_from_json(bad), io::FormatError);

  bad = j;
  bad["ring"] = json{{"kind", "Fq"}, {"p", 2}};
  CHECK_THROWS_AS(io::module_from_json(bad), CharacteristicTwoError);

  bad = j;
  bad["weights"][0]["coords"] = json::array({1, 2});
  CHECK_THROWS_AS(io::module_from_json(bad), io::FormatError);
}

TEST_CASE("report serialization carries witnesses") {
  auto [m, form] = weyl_lattice(RootSystem::A1(), Weight{5}, 5);
  json v = io::to_json(verify_tilting(m, form));
  CHECK(v.at("overall") == "fail");
  CHECK(v.at("padic_hr").at("unimodular_fails_at") == json::array({3}));
  CHECK(v.at("padic_hr").at("determinant_valuation") == 1);

  auto table = oracle::freudenthal_character(RootSystem::A1(), Weight{2});
  json c = io::character_to_json(Weight{2}, table);
  CHECK(c.at("dimension") == 3);
  CHECK(c.at("multiplicities")[0].at("mu") == json::array({2}));
}
