#include "hrf/padic.hpp"

#include <algorithm>
#include <set>

#include "hrf/oracle.hpp"
#include "hrf/plocal.hpp"

namespace hrf {

namespace {

/// Height descending, then lexicographically descending.
std::vector<Weight> descending(const RootSystem& rs, std::vector<Weight> ws) {
  std::vector<std::pair<Rational, Weight>> keyed;
  for (auto& w : ws) keyed.emplace_back(rs.height(w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), std::greater<>());
  std::vector<Weight> out;
  for (auto& [h, w] : keyed) out.push_back(std::move(w));
  return out;
}

std::string label(const Weight& w) { return w.rank() == 1 ? std::to_string(w[0]) : w.to_string(); }

/// F_alpha^n : M_mu -> M_{mu - n alpha}, zero when the walk leaves the support.
Matrix lowering_power(const GradedModule& m, std::size_t alpha, long n, const Weight& mu) {
  const Weight& a = m.root_system().simple_root(alpha);
  const Weight target = mu - a * n;
  Matrix acc = Matrix::identity(m.dim(mu));
  Weight w = mu;
  for (long k = 0; k < n; ++k) {
    if (!m.in_support(w - a)) return Matrix(m.dim(target), m.dim(mu));
    acc = m.lowering_or_zero(alpha, w) * acc;
    w = w - a;
  }
  return acc;
}

/// E_alpha^n : M_mu -> M_{mu + n alpha} from raising blocks.
Matrix raising_power(const GradedModule& m, const RaisingOperators& e, std::size_t alpha, long n, const Weight& mu) {
  const Weight& a = m.root_system().simple_root(alpha);
  const Weight target = mu + a * n;
  Matrix acc = Matrix::identity(m.dim(mu));
  Weight w = mu;
  for (long k = 0; k < n; ++k) {
    auto it = e[alpha].find(w);
    if (!m.in_support(w + a) || it == e[alpha].end()) return Matrix(m.dim(target), m.dim(mu));
    acc = it->second * acc;
    w = w + a;
  }
  return acc;
}

/// First entry of x (scanning rows then columns) with valuation below `required`.
std::optional<Rational> low_entry(const Matrix& x, long required, unsigned long p) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (sgn(x(r, c)) != 0 && valuation(x(r, c), p) < required) return x(r, c);
  return std::nullopt;
}

std::vector<UpSet> relevant_upsets(const GradedModule& m, const std::vector<UpSet>& explicit_upsets) {
  std::vector<UpSet> out;
  for (const auto& mu : descending(m.root_system(), m.support())) out.push_back(UpSet::principal(mu));
  out.insert(out.end(), explicit_upsets.begin(), explicit_upsets.end());
  return out;
}

bool all_unimodular(const GradedModule& coords, const BlockForm& g, unsigned long p) {
  const Ring q = Ring::rationals();
  for (const auto& mu : coords.support()) {
    const Matrix* b = g.block(mu);
    if (b == nullptr || !plocal::is_integral(*b, p)) return false;
    const Rational d = determinant(*b, q);
    if (sgn(d) == 0 || valuation(d, p) != 0) return false;
  }
  return true;
}

}  // namespace

LatticeModule LatticeModule::standard(const GradedModule& m, unsigned long p) {
  std::map<Weight, Matrix> basis;
  for (const auto& [mu, d] : m.dims()) basis.emplace(mu, Matrix::identity(d));
  return LatticeModule{m, std::move(basis), p};
}

GradedModule LatticeModule::coordinates() const {
  const Ring q = Ring::rationals();
  const RootSystem& rs = ambient.root_system();
  std::vector<BlockMap> lowering(rs.rank());
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    for (const auto& [mu, f] : ambient.lowering_blocks(a)) {
      const Weight target = mu - rs.simple_root(a);
      lowering[a].emplace(mu, inverse(basis.at(target), q) * f * basis.at(mu));
    }
  }
  return GradedModule(rs, Ring::p_local(p), ambient.dims(), std::move(lowering));
}

BlockForm LatticeModule::form_in_coordinates(const BlockForm& ambient_form) const {
  BlockForm out;
  for (const auto& [mu, g] : ambient_form.gram) {
    auto it = basis.find(mu);
    if (it == basis.end()) {
      out.gram.emplace(mu, g);  // outside the support; left for the orthogonality check
      continue;
    }
    out.gram.emplace(mu, it->second.transpose() * g * it->second);
  }
  return out;
}

Matrix divided_power_block(const GradedModule& coords, std::size_t alpha, long n, const Weight& mu) {
  return lowering_power(coords, alpha, n, mu) * Rational(Integer(1), factorial(static_cast<unsigned long>(n)));
}

DividedPowerReport check_divided_powers(const LatticeModule& m, const BlockForm* form) {
  if (m.p == 2) throw CharacteristicTwoError();
  const GradedModule coords = m.coordinates();
  const RootSystem& rs = coords.root_system();
  const auto order = descending(rs, coords.support());
  DividedPowerReport r;

  auto scan = [&](bool raising, const RaisingOperators* e) -> bool {
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      const long bound = coords.string_bound(a);
      for (long n = 1; n <= bound; ++n) {
        const long required = valuation(factorial(static_cast<unsigned long>(n)), m.p);
        for (const auto& mu : order) {
          const Matrix x = raising ? raising_power(coords, *e, a, n, mu) : lowering_power(coords, a, n, mu);
          if (auto bad = low_entry(x, required, m.p)) {
            r.pass = false;
            r.witness = DividedPowerWitness{raising, a, n, mu, *bad, required};
            return false;
          }
        }
      }
    }
    return true;
  };

  if (!scan(false, nullptr)) return r;
  if (form != nullptr) {
    const BlockForm g = m.form_in_coordinates(*form);
    if (all_unimodular(coords, g, m.p)) {
      const RaisingOperators e = adjoint_family(coords, g);
      r.raising_checked = true;
      scan(true, &e);
    }
  }
  return r;
}

LatticeInclusion lattice_MI(const LatticeModule& m, const UpSet& set) {
  const GradedModule coords = m.coordinates();
  const RootSystem& rs = coords.root_system();
  LatticeInclusion out;
  // One pass from the top suffices: every generator landing at mu comes from a
  // weight of larger height, whose sublattice is already final.
  for (const auto& mu : descending(rs, coords.support())) {
    const std::size_t d = coords.dim(mu);
    Matrix gens(d, 0);
    if (set.contains(rs, mu)) {
      gens = Matrix::identity(d);
    } else {
      for (std::size_t a = 0; a < rs.rank(); ++a) {
        const Weight& alpha = rs.simple_root(a);
        for (long n = 1;; ++n) {
          const Weight src = mu + alpha * n;
          if (!coords.in_support(src)) break;
          auto it = out.lattice.basis.find(src);
          if (it == out.lattice.basis.end()) continue;
          gens = gens.hconcat(divided_power_block(coords, a, n, src) * it->second);
        }
      }
    }
    Matrix basis = plocal::lattice_basis(gens, m.p);
    if (basis.cols() == 0) continue;
    const auto divisors = plocal::elementary_divisor_valuations(basis, m.p);
    if (!divisors.empty() && divisors.back() > 0 && out.split) {
      out.split = false;
      out.nonsplit_at = mu;
      out.divisor_valuation = divisors.back();
    }
    out.lattice.basis.emplace(mu, std::move(basis));
  }
  return out;
}

PadicHRReport verify_padic_hr(const LatticeModule& m, const BlockForm& form, const std::vector<UpSet>& explicit_upsets) {
  if (m.p == 2) throw CharacteristicTwoError();
  const GradedModule coords = m.coordinates();
  const RootSystem& rs = coords.root_system();
  const Ring q = Ring::rationals();
  const unsigned long p = m.p;
  const auto order = descending(rs, coords.support());
  PadicHRReport r;

  r.weight_orthogonal = Check::Pass;
  for (const auto& [mu, g] : form.gram) {
    if (!coords.in_support(mu) || g.rows() != coords.dim(mu) || g.cols() != coords.dim(mu)) {
      r.weight_orthogonal = Check::Fail;
      break;
    }
  }
  if (r.weight_orthogonal == Check::Fail) return r;
  const BlockForm g = m.form_in_coordinates(form);

  r.symmetric = Check::Pass;
  r.integral = Check::Pass;
  r.unimodular = Check::Pass;
  bool invertible = true;
  for (const auto& mu : order) {
    const Matrix b = gram_or_zero(coords, g, mu);
    if (r.symmetric == Check::Pass && !b.is_symmetric()) r.symmetric = Check::Fail;
    if (r.integral == Check::Pass && !plocal::is_integral(b, p)) {
      r.integral = Check::Fail;
      r.nonintegral_at = mu;
    }
    const Rational d = determinant(b, q);
    if (sgn(d) == 0) invertible = false;
    if (r.unimodular == Check::Pass && (sgn(d) == 0 || valuation(d, p) != 0)) {
      r.unimodular = Check::Fail;
      r.unimodular_fails_at = mu;
      r.determinant_valuation = sgn(d) == 0 ? kInfiniteValuation : valuation(d, p);
    }
  }

  if (invertible) {
    if (auto w = find_commutator_failure(coords, adjoint_family(coords, g))) {
      r.commutators = Check::Fail;
      r.commutator_witness = w;
    } else {
      r.commutators = Check::Pass;
    }
  }

  r.faithful = Check::Pass;
  r.lattice_lemma = Check::Pass;
  for (const auto& set : relevant_upsets(coords, explicit_upsets)) {
    r.checked_upsets.push_back(set);
    const LatticeInclusion inc = lattice_MI(m, set);
    if (r.faithful == Check::Pass) {
      for (const auto& mu : order) {
        auto it = inc.lattice.basis.find(mu);
        if (it == inc.lattice.basis.end()) continue;
        const Matrix s = it->second;
        if (sgn(determinant(s.transpose() * gram_or_zero(coords, g, mu) * s, q)) == 0) {
          r.faithful = Check::Fail;
          r.unfaithful_upset = set;
          r.unfaithful_at = mu;
          break;
        }
      }
    }
    if (r.lattice_lemma == Check::Pass) {
      const Subspace rational = submodule_MI(coords, set);
      for (const auto& mu : order) {
        auto a = inc.lattice.basis.find(mu);
        auto b = rational.basis.find(mu);
        const std::size_t ra = a == inc.lattice.basis.end() ? 0 : a->second.cols();
        const std::size_t rb = b == rational.basis.end() ? 0 : b->second.cols();
        bool same = ra == rb;
        if (same && ra > 0) same = plocal::same_lattice(a->second, plocal::saturation(b->second, p), p);
        if (!same) {
          r.lattice_lemma = Check::Fail;
          r.lemma_fails_for = set;
          break;
        }
      }
    }
  }

  r.overall = r.symmetric == Check::Pass && r.integral == Check::Pass && r.unimodular == Check::Pass &&
              r.weight_orthogonal == Check::Pass && r.commutators == Check::Pass && r.faithful == Check::Pass &&
              r.lattice_lemma == Check::Pass;
  return r;
}

std::pair<LatticeModule, BlockForm> weyl_lattice(const RootSystem& rs, const Weight& lambda, unsigned long p) {
  if (p == 2) throw CharacteristicTwoError();
  if (!is_prime(p)) throw std::invalid_argument("weyl_lattice: p must be prime");
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_lattice: " + lambda.to_string() + " is not dominant");
  StandardModule v = standard_module(rs, Ring::rationals(), lambda);
  const GradedModule& mod = v.module;
  const Rational top = v.form.block(lambda)->operator()(0, 0);
  BlockForm form = v.form.scaled(1 / top, Ring::rationals());

  std::map<Weight, Matrix> basis;
  for (const auto& mu : descending(rs, mod.support())) {
    if (mu == lambda) {
      basis.emplace(mu, Matrix::identity(1));
      continue;
    }
    // Generators f_alpha^{(n)} b for lattice vectors b at mu + n alpha; larger
    // n first, so the Nakayama selection prefers the deepest divided powers.
    struct Source {
      long n;
      std::size_t alpha;
    };
    std::vector<Source> sources;
    for (std::size_t a = 0; a < rs.rank(); ++a)
      for (long n = 1; mod.in_support(mu + rs.simple_root(a) * n); ++n) sources.push_back({n, a});
    std::stable_sort(sources.begin(), sources.end(), [](const Source& x, const Source& y) { return x.n > y.n; });
    Matrix gens(mod.dim(mu), 0);
    for (const auto& s : sources) {
      const Weight src = mu + rs.simple_root(s.alpha) * s.n;
      gens = gens.hconcat(divided_power_block(mod, s.alpha, s.n, src) * basis.at(src));
    }
    Matrix b = plocal::basis_from_generators(gens, p);
    if (b.cols() != mod.dim(mu)) throw std::logic_error("Weyl lattice does not span the weight space at " + mu.to_string());
    basis.emplace(mu, std::move(b));
  }
  return {LatticeModule{mod, std::move(basis), p}, std::move(form)};
}

std::vector<Weight> filtration_order(const RootSystem& rs, const std::vector<Weight>& support) {
  std::set<Weight> remaining(support.begin(), support.end());
  std::vector<Weight> out;
  while (!remaining.empty()) {
    // Lexicographically largest weight with nothing strictly above it left.
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
      bool maximal = std::none_of(remaining.begin(), remaining.end(),
                                  [&](const Weight& nu) { return nu != *it && rs.leq(*it, nu); });
      if (maximal) {
        out.push_back(*it);
        remaining.erase(std::next(it).base());
        break;
      }
    }
  }
  return out;
}

WeylFiltrationReport weyl_filtration(const LatticeModule& m) {
  const RootSystem& rs = m.ambient.root_system();
  WeylFiltrationReport r;
  r.order = filtration_order(rs, m.ambient.support());
  Dimensions previous;
  UpSet set;
  for (const auto& mu : r.order) {
    set.generators.push_back(mu);
    const LatticeInclusion inc = lattice_MI(m, set);
    if (!inc.split) {
      r.failure = WeylFiltrationFailure{mu, "inclusion does not split at weight " + label(*inc.nonsplit_at)};
      return r;
    }
    Dimensions current = inc.lattice.dims();
    std::map<Weight, long> diff;
    for (const auto& [w, d] : current) diff[w] += static_cast<long>(d);
    for (const auto& [w, d] : previous) diff[w] -= static_cast<long>(d);
    std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
    const long mult = diff.contains(mu) ? diff.at(mu) : 0;
    if (mult == 0) {
      if (!diff.empty()) {
        r.failure = WeylFiltrationFailure{mu, "subquotient at " + label(mu) + " has no highest weight vector"};
        return r;
      }
    } else {
      if (!rs.is_dominant(mu)) {
        r.failure = WeylFiltrationFailure{mu, "subquotient has non-dominant highest weight " + label(mu)};
        return r;
      }
      std::map<Weight, long> expected;
      for (const auto& [w, k] : oracle::freudenthal_character(rs, mu)) expected.emplace(w, k * mult);
      if (expected != diff) {
        r.failure = WeylFiltrationFailure{mu, "subquotient at " + label(mu) + " is not a sum of Weyl modules"};
        return r;
      }
      r.steps.emplace_back(mu, mult);
    }
    previous = std::move(current);
  }
  if (previous != m.ambient.dims()) {
    r.failure = WeylFiltrationFailure{r.order.empty() ? Weight{} : r.order.back(), "chain does not exhaust M"};
    return r;
  }
  r.ok = true;
  return r;
}

std::pair<LatticeModule, BlockForm> lattice_contravariant_dual(const LatticeModule& m, const BlockForm& form) {
  const GradedModule coords = m.coordinates();
  const BlockForm g = m.form_in_coordinates(form);
  const RaisingOperators e = adjoint_family(coords, g);
  auto [dual, dual_raising] = contravariant_dual(coords, e);
  BlockForm dual_form;
  const Ring q = Ring::rationals();
  for (const auto& mu : coords.support()) dual_form.gram.emplace(mu, inverse(gram_or_zero(coords, g, mu), q));
  return {LatticeModule::standard(dual, m.p), std::move(dual_form)};
}

TiltingVerdict verify_tilting(const LatticeModule& m, const BlockForm& form, const std::vector<UpSet>& explicit_upsets) {
  if (m.p == 2) throw CharacteristicTwoError();
  TiltingVerdict v;

  const DividedPowerReport p1 = check_divided_powers(m);
  v.star_p1 = p1.pass ? Check::Pass : Check::Fail;
  if (!p1.pass) {
    const auto& w = *p1.witness;
    v.star_p1_witness = w;
    v.failure = "(*)p1 fails: F_" + std::to_string(w.alpha + 1) + "^" + std::to_string(w.n) + " at weight " +
                label(w.mu) + " has entry " + format_rational(w.entry) + " of valuation below " +
                std::to_string(w.required);
    return v;
  }

  v.star_p2 = Check::Pass;
  for (const auto& set : relevant_upsets(m.ambient, explicit_upsets)) {
    const LatticeInclusion inc = lattice_MI(m, set);
    if (!inc.split) {
      v.star_p2 = Check::Fail;
      v.star_p2_upset = set;
      v.star_p2_weight = inc.nonsplit_at;
      v.failure = "(*)p2 fails: M_I does not split for I = " + set.to_string() + " at weight " +
                  label(*inc.nonsplit_at);
      return v;
    }
  }

  v.padic_hr = verify_padic_hr(m, form, explicit_upsets);
  const PadicHRReport& h = *v.padic_hr;
  if (!h.overall) {
    if (h.weight_orthogonal != Check::Pass) {
      v.failure = "form blocks do not match the support";
    } else if (h.symmetric != Check::Pass) {
      v.failure = "form is not symmetric";
    } else if (h.integral != Check::Pass) {
      v.failure = "form is not integral at weight " + label(*h.nonintegral_at);
    } else if (h.unimodular != Check::Pass) {
      v.failure = "unimodularity fails at weight " + label(*h.unimodular_fails_at) + " (determinant valuation " +
                  (h.determinant_valuation == kInfiniteValuation ? std::string("infinite")
                                                                  : std::to_string(h.determinant_valuation)) +
                  ")";
    } else if (h.commutators != Check::Pass) {
      const auto& w = *h.commutator_witness;
      v.failure = "[E_" + std::to_string(w.alpha + 1) + ", F_" + std::to_string(w.beta + 1) + "] fails at weight " +
                  label(w.mu);
    } else if (h.faithful != Check::Pass) {
      v.failure = "restriction to M_I is not faithful for I = " + h.unfaithful_upset->to_string();
    } else {
      v.failure = "M_I differs from M intersected with the rational M_I for I = " + h.lemma_fails_for->to_string();
    }
    return v;
  }

  const DividedPowerReport e = check_divided_powers(m, &form);
  v.self_dual = e.pass && e.raising_checked ? Check::Pass : Check::Fail;
  if (v.self_dual == Check::Fail) {
    v.failure = "E divided powers are not integral, so M is not isomorphic to its dual";
    return v;
  }

  v.filtration = weyl_filtration(m);
  if (!v.filtration->ok) {
    v.failure = "M has no Weyl filtration: " + v.filtration->failure->message;
    return v;
  }
  auto [dual, dual_form] = lattice_contravariant_dual(m, form);
  v.dual_filtration = weyl_filtration(dual);
  if (!v.dual_filtration->ok) {
    v.failure = "the contravariant dual has no Weyl filtration: " + v.dual_filtration->failure->message;
    return v;
  }
  v.overall = true;
  return v;
}

}  // namespace hrf
