#include "doctest.h"

#include "hrf/hrform.hpp"
#include "support.hpp"

using namespace hrf;

namespace {

testing::FormedModule standard(const RootSystem& rs, const Weight& lambda) {
  auto v = standard_module(rs, Ring::rationals(), lambda);
  return {v.module, v.form};
}

}  // namespace

TEST_CASE("V(lambda) with its canonical form is HR") {
  for (const auto& [rs, lambda] : std::vector<std::pair<RootSystem, Weight>>{{RootSystem::A1(), Weight{4}},
                                                                             {RootSystem::A2(), Weight{1, 1}},
                                                                             {RootSystem::B2(), Weight{1, 1}},
                                                                             {RootSystem::G2(), Weight{1, 0}}}) {
    auto fm = standard(rs, lambda);
    auto r = verify_hr(fm.module, fm.form);
    CHECK(r.overall);
    auto d = decompose(fm.module, fm.form);
    REQUIRE(d.certified);
    CHECK(d.highest_weights() == std::vector<Weight>{lambda});
    CHECK(d.components[0].scalar == 1);
  }
}

TEST_CASE("a sign flip on one weight space breaks the commutators") {
  auto fm = standard(RootSystem::A1(), Weight{2});
  fm.form.gram[Weight{0}] = fm.form.gram[Weight{0}] * Rational(-1);
  auto r = verify_hr(fm.module, fm.form);
  CHECK(r.commutators == Check::Fail);
  CHECK_FALSE(r.overall);
}

TEST_CASE("degenerate weight block is reported") {
  auto fm = standard(RootSystem::A1(), Weight{2});
  fm.form.gram[Weight{0}] = Matrix(1, 1);
  auto r = verify_hr(fm.module, fm.form);
  CHECK(r.closed_restrictions == Check::Fail);
  CHECK(r.degenerate_at == Weight{0});
  CHECK_FALSE(r.failing_upset.has_value());
  CHECK_THROWS_AS(adjoint_family(fm.module, fm.form), SingularGramError);
}

TEST_CASE("form block outside the support") {
  auto fm = standard(RootSystem::A1(), Weight{1});
  fm.form.gram.emplace(Weight{5}, Matrix::identity(1));
  auto r = verify_hr(fm.module, fm.form);
  CHECK(r.weight_orthogonal == Check::Fail);
  CHECK_FALSE(r.overall);
}

TEST_CASE("asymmetric form") {
  auto fm = testing::direct_sum({standard(RootSystem::A1(), Weight{0}), standard(RootSystem::A1(), Weight{0})});
  fm.form.gram[Weight{0}](0, 1) = 1;
  auto r = verify_hr(fm.module, fm.form);
  CHECK(r.symmetric == Check::Fail);
}

TEST_CASE("a Verma-type module (lowest weight missing) is not HR") {
  // F has a kernel at the bottom, but the module is cut off: the truncated
  // non-dominant standard module has no finite-dimensional decomposition.
  auto v = standard_module(RootSystem::A1(), Ring::rationals(), Weight{-2}, 2);
  auto r = verify_hr(v.module, v.form);
  CHECK_FALSE(r.overall);
}

TEST_CASE("explicit up-sets are restricted and reported") {
  auto fm = testing::direct_sum({standard(RootSystem::A1(), Weight{2}), standard(RootSystem::A1(), Weight{0})});
  auto r = verify_hr(fm.module, fm.form, {UpSet::principal(Weight{0}), UpSet::principal(Weight{2})});
  CHECK(r.overall);
  CHECK(r.checked_upsets.size() == 2);
}

TEST_CASE("decompose recovers multiplicities through basis changes") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    auto inst = testing::random_instance(rng);
    INFO(inst.description);
    auto d = decompose(inst.data.module, inst.data.form);
    REQUIRE(d.certified);
    auto hw = d.highest_weights();
    std::sort(hw.begin(), hw.end());
    CHECK(hw == inst.highest_weights);
  }
}

TEST_CASE("isotropic starting vectors are handled") {
  // V(0)+V(0) with the hyperbolic form [[0,1],[1,0]]: every basis vector is isotropic.
  auto fm = testing::direct_sum({standard(RootSystem::A1(), Weight{0}), standard(RootSystem::A1(), Weight{0})});
  fm.form.gram[Weight{0}] = Matrix::from_rows({{0, 1}, {1, 0}});
  auto d = decompose(fm.module, fm.form);
  REQUIRE(d.certified);
  CHECK(d.components.size() == 2);
  CHECK(verify_hr(fm.module, fm.form).overall);
}

TEST_CASE("synthesized action satisfies every relation") {
  for (const auto& [rs, lambda] : std::vector<std::pair<RootSystem, Weight>>{
           {RootSystem::A2(), Weight{1, 1}}, {RootSystem::B2(), Weight{1, 0}}, {RootSystem::G2(), Weight{1, 0}}}) {
    auto fm = standard(rs, lambda);
    auto s = synthesize_g_module(fm.module, fm.form);
    INFO(rs.label(), " ", (s.violations.empty() ? std::string() : s.violations.front()));
    CHECK(s.serre_checked);
    CHECK(s.violations.empty());
  }
}

TEST_CASE("synthesized action reports violated relations") {
  // A three-step chain top -F_2-> mid -F_1-> low with identity forms: the
  // alpha_1 commutator at mid gives 1 where <mid, alpha_1^vee> = 2.
  const RootSystem a2 = RootSystem::A2();
  const Weight top{1, 1};
  const Weight mid = top - a2.simple_root(1);
  const Weight low = mid - a2.simple_root(0);
  Dimensions dims{{top, 1}, {mid, 1}, {low, 1}};
  std::vector<BlockMap> f(2);
  f[1].emplace(top, Matrix::identity(1));
  f[0].emplace(mid, Matrix::identity(1));
  GradedModule m(a2, Ring::rationals(), dims, f);
  BlockForm g;
  for (const auto& w : {top, mid, low}) g.gram.emplace(w, Matrix::identity(1));
  auto s = synthesize_g_module(m, g);
  CHECK_FALSE(s.violations.empty());
  CHECK_FALSE(verify_hr(m, g).overall);
}

TEST_CASE("Lefschetz on standard modules and a failure") {
  auto fm = standard(RootSystem::A2(), Weight{2, 1});
  CHECK(lefschetz_check(fm.module).pass);

  Dimensions dims{{Weight{1}, 1}, {Weight{-1}, 1}};
  GradedModule zero_f(RootSystem::A1(), Ring::rationals(), dims, {});
  auto r = lefschetz_check(zero_f);
  CHECK_FALSE(r.pass);
  CHECK(r.mu == Weight{1});
  CHECK(r.l == 1);
}

TEST_CASE("char 3: V(rho) over F_3 carries a nondegenerate form") {
  auto v = standard_module(RootSystem::A2(), Ring::prime_field(3), Weight{1, 1}, 6);
  for (const auto& [mu, g] : v.form.gram) CHECK(rank(g, Ring::prime_field(3)) == g.rows());
}
