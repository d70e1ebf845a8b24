// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hrf/oracle.hpp"
#include "hrf/padic.hpp"
#include "hrf/plocal.hpp"
#include "support.hpp"

using namespace hrf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

#define EXPECT(cond, msg)                  \
  do {                                     \
    if (!(cond)) {                         \
      std::ostringstream os_;              \
      os_ << msg;                          \
      return Outcome{false, os_.str()};    \
    }                                      \
  } while (0)

using Steps = std::vector<std::pair<Weight, long>>;

std::vector<testing::RandomInstance> random_instances() {
  std::mt19937 rng(314159);
  std::vector<testing::RandomInstance> out;
  for (int i = 0; i < 20; ++i) out.push_back(testing::random_instance(rng));
  return out;
}

const std::vector<testing::RandomInstance>& instances() {
  static const auto all = random_instances();
  return all;
}

Outcome sl2_gram_closed_form() {
  const RootSystem a1 = RootSystem::A1();
  for (long n = 0; n <= 12; ++n)
    for (long l = 0; l <= n + 2; ++l) {
      SimpleRootPath p{std::vector<std::size_t>(static_cast<std::size_t>(l), 0)};
      const Rational got = gram_entry(a1, Weight{n}, p, p);
      EXPECT(got == Rational(oracle::sl2_gram(n, l)), "n=" << n << " l=" << l << " got " << format_rational(got));
    }
  EXPECT(oracle::sl2_gram(3, 2) == 12 && oracle::sl2_gram(3, 4) == 0, "closed form anchors");
  return {true, "n<=12, l<=n+2"};
}

Outcome characters_match(const RootSystem& rs, const Weight& lambda) {
  auto v = standard_module(rs, Ring::rationals(), lambda);
  auto table = oracle::freudenthal_character(rs, lambda);
  EXPECT(!v.truncated, rs.label() << " " << lambda.to_string() << " truncated");
  EXPECT(v.module.dims().size() == table.size(), rs.label() << " " << lambda.to_string() << " support differs");
  for (const auto& [w, m] : table)
    EXPECT(v.module.dim(w) == static_cast<std::size_t>(m), rs.label() << " " << lambda.to_string() << " at " << w.to_string());
  return {};
}

Outcome standard_characters() {
  int count = 0;
  for (long n = 0; n <= 8; ++n, ++count)
    if (auto o = characters_match(RootSystem::A1(), Weight{n}); !o.pass) return o;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b, ++count)
      if (auto o = characters_match(RootSystem::A2(), Weight{a, b}); !o.pass) return o;
  if (auto o = characters_match(RootSystem::B2(), Weight{1, 1}); !o.pass) return o;
  ++count;
  const auto a2 = standard_module(RootSystem::A2(), Ring::rationals(), Weight{1, 1}).module.total_dim();
  const auto b2 = standard_module(RootSystem::B2(), Ring::rationals(), Weight{1, 1}).module.total_dim();
  EXPECT(a2 == 8 && b2 == 16, "dim V(rho): A2 " << a2 << ", B2 " << b2);
  return {true, std::to_string(count) + " weights"};
}

Outcome characteristic_drop() {
  auto v = standard_module(RootSystem::A2(), Ring::prime_field(3), Weight{1, 1}, 6);
  EXPECT(v.module.total_dim() == 7, "total dimension " << v.module.total_dim());
  EXPECT(v.module.dim(Weight{0, 0}) == 1, "zero weight dimension " << v.module.dim(Weight{0, 0}));
  const Matrix g = gram_block(RootSystem::A2(), Weight{1, 1}, Weight{0, 0});
  EXPECT(g == Matrix::from_rows({{2, 1}, {1, 2}}), "zero-weight path Gram " << g.to_string());
  EXPECT(rank(g.normalized(Ring::prime_field(3)), Ring::prime_field(3)) == 1, "rank mod 3");
  return {true, "dim 7, zero weight 1"};
}

Outcome hr_round_trip() {
  for (std::size_t i = 0; i < instances().size(); ++i) {
    const auto& inst = instances()[i];
    auto r = verify_hr(inst.data.module, inst.data.form);
    EXPECT(r.overall, "instance " << i << " (" << inst.description << "): verify_hr fails: " << r.restriction_detail);
    auto d = decompose(inst.data.module, inst.data.form);
    EXPECT(d.certified, "instance " << i << ": decomposition not certified");
    auto hw = d.highest_weights();
    std::sort(hw.begin(), hw.end());
    EXPECT(hw == inst.highest_weights, "instance " << i << ": highest weights differ");
  }
  return {true, "20 instances"};
}

Outcome serre_relations() {
  for (std::size_t i = 0; i < instances().size(); ++i) {
    const auto& inst = instances()[i];
    auto s = synthesize_g_module(inst.data.module, inst.data.form);
    EXPECT(s.serre_checked && s.violations.empty(),
           "instance " << i << ": " << (s.violations.empty() ? "not checked" : s.violations.front()));
  }
  return {true, "20 instances"};
}

Outcome lefschetz() {
  for (std::size_t i = 0; i < instances().size(); ++i) {
    auto r = lefschetz_check(instances()[i].data.module);
    EXPECT(r.pass, "instance " << i << ": F_" << r.alpha + 1 << "^" << r.l << " at " << r.mu.to_string());
  }
  return {true, "20 instances"};
}

Outcome weyl_lattices() {
  auto [m3, f3] = weyl_lattice(RootSystem::A1(), Weight{3}, 5);
  const BlockForm g = m3.form_in_coordinates(f3);
  const std::vector<long> expected{1, 3, 3, 1};
  for (long i = 0; i <= 3; ++i) {
    const Matrix* b = g.block(Weight{3 - 2 * i});
    EXPECT(b != nullptr && b->rows() == 1 && (*b)(0, 0) == expected[i], "Gram at " << 3 - 2 * i);
    EXPECT(valuation((*b)(0, 0), 5) == 0, "non-unit at " << 3 - 2 * i);
  }
  auto v3 = verify_tilting(m3, f3);
  EXPECT(v3.overall, "Delta(3): " << v3.failure);
  EXPECT((v3.filtration->steps == Steps{{Weight{3}, 1}}), "Delta(3) filtration");

  auto [m5, f5] = weyl_lattice(RootSystem::A1(), Weight{5}, 5);
  auto v5 = verify_tilting(m5, f5);
  EXPECT(!v5.overall, "Delta(5) passed");
  EXPECT(v5.padic_hr && v5.padic_hr->unimodular == Check::Fail, "Delta(5) did not fail at unimodularity: " << v5.failure);
  EXPECT(v5.padic_hr->unimodular_fails_at == Weight{3}, "witness weight");
  EXPECT(v5.padic_hr->determinant_valuation == 1, "witness valuation " << v5.padic_hr->determinant_valuation);
  return {true, "Delta(3) passes, Delta(5): " + v5.failure};
}

Outcome tilting_fixture() {
  auto fx = oracle::sl2_tilting_fixture(3);
  EXPECT(fx.has_value(), "search exhausted at p=3");
  auto v = verify_tilting(fx->lattice, fx->form);
  EXPECT(v.overall, "verify_tilting: " << v.failure);
  const Steps want{{Weight{3}, 1}, {Weight{1}, 1}};
  EXPECT(v.filtration->steps == want, "filtration of M");
  EXPECT(v.dual_filtration->steps == want, "filtration of dM");
  auto [dual, dual_form] = lattice_contravariant_dual(fx->lattice, fx->form);
  auto direct = weyl_filtration(dual);
  EXPECT(direct.ok && direct.steps == want, "filtration of dM recomputed");
  return {true, "index 3^" + std::to_string(fx->index_exponent) + ", scale " + format_rational(fx->summand_scale) +
                    ", " + std::to_string(fx->candidates_examined) + " candidates"};
}

Outcome lemma_on(const std::string& name, const LatticeModule& m, const BlockForm& form) {
  const GradedModule coords = m.coordinates();
  for (const auto& mu : coords.support()) {
    const UpSet set = UpSet::principal(mu);
    auto inc = lattice_MI(m, set);
    auto rational = submodule_MI(coords, set);
    EXPECT(inc.lattice.basis.size() == rational.basis.size(), name << ": support differs for I = " << set.to_string());
    for (const auto& [w, b] : rational.basis) {
      auto it = inc.lattice.basis.find(w);
      EXPECT(it != inc.lattice.basis.end(), name << ": missing weight " << w.to_string());
      EXPECT(plocal::same_lattice(it->second, plocal::saturation(b, m.p), m.p),
             name << ": M_I differs at " << w.to_string() << " for I = " << set.to_string());
    }
  }
  auto r = verify_padic_hr(m, form);
  EXPECT(r.lattice_lemma == Check::Pass, name << ": report disagrees");
  return {};
}

Outcome lattice_lemma() {
  auto [m3, f3] = weyl_lattice(RootSystem::A1(), Weight{3}, 5);
  auto [m5, f5] = weyl_lattice(RootSystem::A1(), Weight{5}, 5);
  if (auto o = lemma_on("Delta(3)", m3, f3); !o.pass) return o;
  if (auto o = lemma_on("Delta(5)", m5, f5); !o.pass) return o;
  auto fx = oracle::sl2_tilting_fixture(3);
  EXPECT(fx.has_value(), "fixture missing");
  if (auto o = lemma_on("T(3)", fx->lattice, fx->form); !o.pass) return o;
  auto [dual, dual_form] = lattice_contravariant_dual(fx->lattice, fx->form);
  if (auto o = lemma_on("dT(3)", dual, dual_form); !o.pass) return o;
  return {true, "4 lattices, all principal up-sets"};
}

Outcome oracle_independence() {
  const std::vector<std::pair<RootSystem, Weight>> cases{
      {RootSystem::A1(), Weight{0}},    {RootSystem::A1(), Weight{1}},    {RootSystem::A1(), Weight{4}},
      {RootSystem::A1(), Weight{9}},    {RootSystem::A1(), Weight{12}},   {RootSystem::A2(), Weight{1, 0}},
      {RootSystem::A2(), Weight{1, 1}}, {RootSystem::A2(), Weight{2, 0}}, {RootSystem::A2(), Weight{2, 1}},
      {RootSystem::A2(), Weight{3, 2}}, {RootSystem::B2(), Weight{1, 0}}, {RootSystem::B2(), Weight{0, 1}},
      {RootSystem::B2(), Weight{1, 1}}, {RootSystem::B2(), Weight{2, 1}}, {RootSystem::B2(), Weight{0, 3}}};
  for (const auto& [rs, lambda] : cases) {
    long total = 0;
    for (const auto& [w, m] : oracle::freudenthal_character(rs, lambda)) total += m;
    const Integer d = oracle::weyl_dim(rs, lambda);
    EXPECT(d == total, rs.label() << " " << lambda.to_string() << ": weyl_dim " << d.get_str() << " vs " << total);
  }
  return {true, std::to_string(cases.size()) + " weights"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sl2 Gram closed form", sl2_gram_closed_form},
      {"standard-module characters (char 0)", standard_characters},
      {"positive characteristic drop (A2, rho, F_3)", characteristic_drop},
      {"HR round-trip on randomized direct sums", hr_round_trip},
      {"Serre relations from the HR-form", serre_relations},
      {"Lefschetz property", lefschetz},
      {"p-adic Weyl lattices", weyl_lattices},
      {"sl2 tilting fixture T(3), p=3", tilting_fixture},
      {"lattice lemma M_I = M cap (M_Q)_I", lattice_lemma},
      {"oracle independence", oracle_independence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << "s)\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
