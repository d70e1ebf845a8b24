#include "hrf/hrform.hpp"

#include <algorithm>

namespace hrf {

std::string to_string(Check c) {
  switch (c) {
    case Check::Pass:
      return "pass";
    case Check::Fail:
      return "fail";
    case Check::Skipped:
      return "skipped";
  }
  return "?";
}

std::vector<Weight> DecompositionResult::highest_weights() const {
  std::vector<Weight> out;
  for (const auto& c : components) out.push_back(c.highest_weight);
  return out;
}

Matrix gram_or_zero(const GradedModule& m, const BlockForm& form, const Weight& mu) {
  if (const Matrix* g = form.block(mu)) return *g;
  return Matrix(m.dim(mu), m.dim(mu));
}

std::map<Weight, Matrix> restricted_gram(const GradedModule& m, const BlockForm& form, const Subspace& s) {
  std::map<Weight, Matrix> out;
  for (const auto& [mu, b] : s.basis) {
    out.emplace(mu, multiply(multiply(b.transpose(), gram_or_zero(m, form, mu), m.ring()), b, m.ring()));
  }
  return out;
}

RaisingOperators adjoint_family(const GradedModule& m, const BlockForm& form) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  std::map<Weight, Matrix> inverses;
  for (const auto& mu : m.support()) {
    try {
      inverses.emplace(mu, inverse(gram_or_zero(m, form, mu), ring));
    } catch (const ArithmeticError&) {
      throw SingularGramError(mu);
    }
  }
  RaisingOperators e(rs.rank());
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    for (const auto& [src, f] : m.lowering_blocks(a)) {
      // f : M_src -> M_{src - alpha}; its adjoint raises src - alpha back to src.
      const Weight low = src - rs.simple_root(a);
      Matrix blk = multiply(multiply(inverses.at(src), f.transpose(), ring), gram_or_zero(m, form, low), ring);
      e[a].emplace(low, std::move(blk));
    }
  }
  return e;
}

namespace {

std::vector<GradedOperator> raising_operators(const GradedModule& m, const RaisingOperators& e) {
  std::vector<GradedOperator> out;
  for (std::size_t a = 0; a < e.size(); ++a) out.emplace_back(m.root_system().simple_root(a), e[a]);
  return out;
}

std::vector<GradedOperator> cartan_operators(const GradedModule& m) {
  std::vector<GradedOperator> out;
  for (std::size_t a = 0; a < m.root_system().rank(); ++a) {
    std::map<Weight, Rational> s;
    for (const auto& mu : m.support()) s.emplace(mu, m.ring().from_int(m.root_system().pairing(mu, a)));
    out.push_back(GradedOperator::diagonal(m.dims(), s));
  }
  return out;
}

/// First weight where [E_a, F_b] differs from delta_{ab} h_a.
std::optional<CommutatorWitness> commutator_failure(const GradedModule& m, const std::vector<GradedOperator>& e) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  const auto h = cartan_operators(m);
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    for (std::size_t b = 0; b < rs.rank(); ++b) {
      GradedOperator f = m.lowering(b);
      GradedOperator comm = e[a].compose(f, ring).minus(f.compose(e[a], ring), ring);
      if (a == b) comm = comm.minus(h[a], ring);
      for (const auto& mu : m.support()) {
        const Matrix* blk = comm.block(mu);
        if (blk != nullptr && !blk->is_zero()) return CommutatorWitness{a, b, mu};
      }
    }
  }
  return std::nullopt;
}

/// Orthogonal basis (in coordinates) of a symmetric Gram without square roots.
/// Returns nullopt when a nonzero isotropic remainder blocks the procedure.
std::optional<std::vector<std::vector<Rational>>> anisotropic_basis(const Matrix& g, const Ring& ring) {
  const std::size_t n = g.rows();
  auto pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (ring.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!ring.is_zero(y[j])) s = ring.add(s, ring.mul(ring.mul(x[i], g(i, j)), y[j]));
    }
    return s;
  };
  std::vector<std::vector<Rational>> rem;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    rem.push_back(std::move(v));
  }
  std::vector<std::vector<Rational>> out;
  while (!rem.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < rem.size() && !pick; ++i)
      if (!ring.is_zero(pair(rem[i], rem[i]))) pick = i;
    if (!pick) {
      // All remaining vectors are isotropic; v + w is anisotropic when (v, w) != 0 and char != 2.
      for (std::size_t i = 0; i < rem.size() && !pick; ++i) {
        for (std::size_t j = i + 1; j < rem.size(); ++j) {
          if (!ring.is_zero(pair(rem[i], rem[j]))) {
            for (std::size_t k = 0; k < n; ++k) rem[i][k] = ring.add(rem[i][k], rem[j][k]);
            pick = i;
            break;
          }
        }
      }
    }
    if (!pick) return std::nullopt;
    std::vector<Rational> u = rem[*pick];
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(*pick));
    const Rational quu = pair(u, u);
    for (auto& w : rem) {
      Rational c = ring.div(pair(w, u), quu);
      if (ring.is_zero(c)) continue;
      for (std::size_t k = 0; k < n; ++k) w[k] = ring.sub(w[k], ring.mul(c, u[k]));
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::optional<Weight> choose_maximal(const RootSystem& rs, const std::vector<Weight>& support) {
  std::optional<Weight> best;
  for (const auto& mu : support) {
    bool maximal = std::none_of(support.begin(), support.end(),
                                [&](const Weight& nu) { return nu != mu && rs.leq(mu, nu); });
    if (maximal && (!best || *best < mu)) best = mu;
  }
  return best;
}

long depth_bound(const RootSystem& rs, const Weight& lambda, const std::vector<Weight>& support) {
  long best = 0;
  for (const auto& nu : support) {
    if (auto x = rs.nonnegative_root_coordinates(lambda - nu)) {
      long h = 0;
      for (auto c : *x) h += c;
      best = std::max(best, h);
    }
  }
  return best;
}

}  // namespace

DecompositionResult decompose(const GradedModule& m, const BlockForm& form) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  DecompositionResult result;
  auto fail = [&](DecompositionFailure::Kind kind, const Weight& mu, std::string msg) {
    result.certified = false;
    result.failure = DecompositionFailure{kind, mu, std::move(msg)};
    return result;
  };
  if (ring.characteristic() == 2) throw CharacteristicTwoError();

  std::map<Weight, Matrix> gram;
  for (const auto& mu : m.support()) {
    gram.emplace(mu, gram_or_zero(m, form, mu));
    if (rank(gram.at(mu), ring) != m.dim(mu)) {
      return fail(DecompositionFailure::Kind::SingularBlock, mu, "form is degenerate on M_" + mu.to_string());
    }
  }
  const std::vector<Weight> full_support = m.support();
  std::map<Weight, StandardModule> standards;

  Subspace remaining;
  for (const auto& [mu, d] : m.dims()) remaining.basis.emplace(mu, Matrix::identity(d));

  while (remaining.total_dim() > 0) {
    std::vector<Weight> supp;
    for (const auto& [mu, b] : remaining.basis)
      if (b.cols() > 0) supp.push_back(mu);
    const Weight lambda = *choose_maximal(rs, supp);

    const Matrix& top = remaining.basis.at(lambda);
    Matrix top_gram = multiply(multiply(top.transpose(), gram.at(lambda), ring), top, ring);
    auto ortho = anisotropic_basis(top_gram, ring);
    if (!ortho) {
      return fail(DecompositionFailure::Kind::Isotropic, lambda,
                  "no anisotropic vector in the top weight space " + lambda.to_string());
    }

    auto std_it = standards.find(lambda);
    if (std_it == standards.end()) {
      const long bound = depth_bound(rs, lambda, full_support);
      std_it = standards.emplace(lambda, standard_module(rs, ring, lambda, bound + 1)).first;
    }
    const StandardModule& v = std_it->second;
    if (v.truncated) {
      return fail(DecompositionFailure::Kind::Mismatch, lambda,
                  "V" + lambda.to_string() + " has weights below the support of M");
    }

    std::vector<Component> step;
    for (const auto& y : *ortho) {
      std::vector<Rational> gen = top * std::span<const Rational>(y);
      for (auto& c : gen) c = ring.normalize(c);
      const Rational c = ring.normalize(
          (Matrix::from_columns({y}, y.size()).transpose() * top_gram * Matrix::from_columns({y}, y.size()))(0, 0));

      // Images of paths: F_path(m) with path (a_1..a_l) acting as F_{a_1} o ... o F_{a_l}.
      std::map<SimpleRootPath, GradedVector> images;
      images.emplace(SimpleRootPath{}, GradedVector{{lambda, gen}});
      Component comp{lambda, {}, c};
      // Representatives are built by prepending, so their tails were computed at higher weights.
      std::vector<std::pair<Rational, Weight>> order;
      for (const auto& [nu, reps] : v.representatives) order.emplace_back(rs.height(nu), nu);
      std::sort(order.begin(), order.end(), std::greater<>());
      for (const auto& [ht, nu] : order) {
        const auto& reps = v.representatives.at(nu);
        Matrix phi(m.dim(nu), reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k) {
          const SimpleRootPath& p = reps[k];
          GradedVector img;
          if (auto it = images.find(p); it != images.end()) {
            img = it->second;
          } else {
            SimpleRootPath tail{std::vector<std::size_t>(p.word.begin() + 1, p.word.end())};
            auto base = images.find(tail);
            if (base == images.end()) {
              // Tail is not itself a representative; evaluate from the generator.
              GradedVector cur{{lambda, gen}};
              for (std::size_t i = tail.length(); i-- > 0;) cur = apply_op(m, tail.word[i], cur);
              base = images.emplace(tail, std::move(cur)).first;
            }
            img = apply_op(m, p.word[0], base->second);
            images.emplace(p, img);
          }
          if (auto it = img.find(nu); it != img.end()) phi.set_column(k, it->second);
        }
        if (m.dim(nu) == 0 || rank(phi, ring) != reps.size()) {
          return fail(DecompositionFailure::Kind::Mismatch, nu,
                      "F-cyclic summand generated at " + lambda.to_string() + " is smaller than V" +
                          lambda.to_string() + " at weight " + nu.to_string());
        }
        comp.embedding.basis.emplace(nu, std::move(phi));
      }
      // The summand must be exactly the image of V(lambda): F-closure has no extra weights or dimensions.
      Subspace closure = f_closure(m, std::vector<GradedVector>{GradedVector{{lambda, gen}}});
      for (const auto& [nu, b] : closure.basis) {
        if (b.cols() != comp.embedding.dim(nu)) {
          return fail(DecompositionFailure::Kind::Mismatch, nu,
                      "F-cyclic summand at " + lambda.to_string() + " differs from V" + lambda.to_string() +
                          " at weight " + nu.to_string());
        }
      }
      // Graded isomorphism V(lambda) -> summand: intertwines F and scales the form by c.
      for (const auto& [nu, phi] : comp.embedding.basis) {
        Matrix pulled = multiply(multiply(phi.transpose(), gram.at(nu), ring), phi, ring);
        if (pulled != (v.form.gram.at(nu) * c).normalized(ring)) {
          return fail(DecompositionFailure::Kind::Mismatch, nu,
                      "form on the summand at " + nu.to_string() + " is not c times the form of V" +
                          lambda.to_string());
        }
        for (std::size_t a = 0; a < rs.rank(); ++a) {
          const Weight low = nu - rs.simple_root(a);
          Matrix lhs = multiply(m.lowering_or_zero(a, nu), phi, ring);
          Matrix rhs(m.dim(low), phi.cols());
          if (const Matrix* fv = v.module.lowering_block(a, nu)) rhs = multiply(comp.embedding.basis.at(low), *fv, ring);
          if (lhs != rhs) {
            return fail(DecompositionFailure::Kind::Mismatch, nu,
                        "F_" + std::to_string(a + 1) + " does not intertwine with V" + lambda.to_string() +
                            " at weight " + nu.to_string());
          }
        }
      }
      step.push_back(std::move(comp));
    }

    // Orthogonal complement of this step's summands inside the remaining space.
    Subspace next;
    for (const auto& [nu, b] : remaining.basis) {
      if (b.cols() == 0) continue;
      Matrix span_cols(m.dim(nu), 0);
      for (const auto& comp : step)
        if (auto it = comp.embedding.basis.find(nu); it != comp.embedding.basis.end())
          span_cols = span_cols.hconcat(it->second);
      if (span_cols.cols() == 0) {
        next.basis.emplace(nu, b);
        continue;
      }
      if (rank(b.hconcat(span_cols), ring) != b.cols()) {
        return fail(DecompositionFailure::Kind::NotComplementary, nu,
                    "summand leaves the orthogonal complement at " + nu.to_string());
      }
      Matrix pairing = multiply(multiply(span_cols.transpose(), gram.at(nu), ring), b, ring);
      Matrix k = kernel(pairing, ring);
      if (k.cols() + span_cols.cols() != b.cols()) {
        return fail(DecompositionFailure::Kind::NotComplementary, nu,
                    "form restricted to M_I is degenerate at " + nu.to_string());
      }
      if (k.cols() > 0) next.basis.emplace(nu, multiply(b, k, ring));
    }
    for (auto& comp : step) result.components.push_back(std::move(comp));
    remaining = std::move(next);
  }

  // Pairwise orthogonality of all summands.
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    for (std::size_t j = i + 1; j < result.components.size(); ++j) {
      for (const auto& [nu, bi] : result.components[i].embedding.basis) {
        auto it = result.components[j].embedding.basis.find(nu);
        if (it == result.components[j].embedding.basis.end()) continue;
        if (!multiply(multiply(bi.transpose(), gram.at(nu), ring), it->second, ring).is_zero()) {
          return fail(DecompositionFailure::Kind::NotComplementary, nu, "summands are not orthogonal at " + nu.to_string());
        }
      }
    }
  }
  result.certified = true;
  return result;
}

std::optional<CommutatorWitness> find_commutator_failure(const GradedModule& m, const RaisingOperators& raising) {
  return commutator_failure(m, raising_operators(m, raising));
}

HRReport verify_hr(const GradedModule& m, const BlockForm& form, const std::vector<UpSet>& explicit_upsets) {
  const Ring& ring = m.ring();
  if (ring.characteristic() == 2) throw CharacteristicTwoError();
  HRReport r;

  // (3) weight orthogonality is structural; the block data must fit the support.
  r.weight_orthogonal = Check::Pass;
  for (const auto& [mu, g] : form.gram) {
    if (!m.in_support(mu)) {
      r.weight_orthogonal = Check::Fail;
      r.orthogonality_detail = "form block at " + mu.to_string() + " outside the support";
      break;
    }
    if (g.rows() != m.dim(mu) || g.cols() != m.dim(mu)) {
      r.weight_orthogonal = Check::Fail;
      r.orthogonality_detail = "form block at " + mu.to_string() + " has the wrong shape";
      break;
    }
  }
  if (r.weight_orthogonal == Check::Fail) {
    r.overall = false;
    return r;
  }

  // (1)
  r.symmetric = Check::Pass;
  for (const auto& [mu, g] : form.gram) {
    if (!g.normalized(ring).is_symmetric()) {
      r.symmetric = Check::Fail;
      r.asymmetric_at = mu;
      break;
    }
  }

  // (2) for I = X: every weight block non-degenerate.
  bool nondegenerate = true;
  for (const auto& mu : m.support()) {
    if (rank(gram_or_zero(m, form, mu), ring) != m.dim(mu)) {
      r.closed_restrictions = Check::Fail;
      r.degenerate_at = mu;
      r.restriction_detail = "form is degenerate on the weight space at " + mu.to_string();
      nondegenerate = false;
      break;
    }
  }

  // (4)
  if (nondegenerate) {
    auto e = raising_operators(m, adjoint_family(m, form));
    if (auto w = commutator_failure(m, e)) {
      r.commutators = Check::Fail;
      r.commutator_witness = w;
    } else {
      r.commutators = Check::Pass;
    }
  }

  // (2) for all closed I: certified by a successful decomposition into cyclic standards.
  if (nondegenerate && r.symmetric == Check::Pass && r.commutators == Check::Pass) {
    DecompositionResult d = decompose(m, form);
    if (d.certified) {
      r.closed_restrictions = Check::Pass;
    } else {
      r.closed_restrictions = Check::Fail;
      r.degenerate_at = d.failure->weight;
      r.restriction_detail = d.failure->message;
    }
  }

  for (const auto& set : explicit_upsets) {
    r.checked_upsets.push_back(set);
    if (!nondegenerate) continue;
    Subspace s = submodule_MI(m, set);
    for (const auto& [mu, g] : restricted_gram(m, form, s)) {
      if (rank(g, ring) != g.rows()) {
        r.closed_restrictions = Check::Fail;
        r.degenerate_at = mu;
        r.failing_upset = set;
        r.restriction_detail = "restriction to M_I is degenerate at " + mu.to_string() + " for I = " + set.to_string();
        break;
      }
    }
  }

  r.overall = r.symmetric == Check::Pass && r.weight_orthogonal == Check::Pass && r.commutators == Check::Pass &&
              r.closed_restrictions == Check::Pass;
  return r;
}

ModuleStructure synthesize_g_module(const GradedModule& m, const BlockForm& form) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  ModuleStructure s;
  for (std::size_t a = 0; a < rs.rank(); ++a) s.f.push_back(m.lowering(a));
  s.e = raising_operators(m, adjoint_family(m, form));
  s.h = cartan_operators(m);

  auto name = [](const char* g, std::size_t a) { return std::string(g) + "_" + std::to_string(a + 1); };
  auto require_zero = [&](const GradedOperator& op, const std::string& relation) {
    for (const auto& [mu, blk] : op.blocks()) {
      if (!blk.is_zero()) {
        s.violations.push_back(relation + " fails on M_" + mu.to_string());
        return;
      }
    }
  };
  auto bracket = [&](const GradedOperator& x, const GradedOperator& y) {
    return x.compose(y, ring).minus(y.compose(x, ring), ring);
  };
  // (ad x)^n (y) = sum_k (-1)^k C(n,k) x^{n-k} y x^k
  auto ad_power = [&](const GradedOperator& x, const GradedOperator& y, long n) {
    std::vector<GradedOperator> powers{GradedOperator::identity(m.dims())};
    for (long k = 1; k <= n; ++k) powers.push_back(x.compose(powers.back(), ring));
    GradedOperator total(y.degree() + x.degree() * n);
    for (long k = 0; k <= n; ++k) {
      Rational coeff(binomial(n, static_cast<unsigned long>(k)));
      if (k % 2 == 1) coeff = -coeff;
      total = total.plus(powers[n - k].compose(y, ring).compose(powers[k], ring).scaled(coeff, ring), ring);
    }
    return total;
  };

  for (std::size_t a = 0; a < rs.rank(); ++a) {
    for (std::size_t b = 0; b < rs.rank(); ++b) {
      require_zero(bracket(s.h[a], s.h[b]), "[" + name("h", a) + "," + name("h", b) + "] = 0");
      const Rational c(rs.cartan_entry(a, b));  // <alpha_b, alpha_a^vee>
      require_zero(bracket(s.h[a], s.e[b]).minus(s.e[b].scaled(c, ring), ring),
                   "[" + name("h", a) + "," + name("e", b) + "] = <alpha_" + std::to_string(b + 1) + ",alpha_" +
                       std::to_string(a + 1) + "^vee> e");
      require_zero(bracket(s.h[a], s.f[b]).plus(s.f[b].scaled(c, ring), ring),
                   "[" + name("h", a) + "," + name("f", b) + "] = -<alpha_" + std::to_string(b + 1) + ",alpha_" +
                       std::to_string(a + 1) + "^vee> f");
      GradedOperator ef = bracket(s.e[a], s.f[b]);
      if (a == b) {
        require_zero(ef.minus(s.h[a], ring), "[" + name("e", a) + "," + name("f", a) + "] = " + name("h", a));
      } else {
        require_zero(ef, "[" + name("e", a) + "," + name("f", b) + "] = 0");
        const long n = 1 - rs.cartan_entry(a, b);  // 1 - <alpha_b, alpha_a^vee>
        require_zero(ad_power(s.e[a], s.e[b], n),
                     "(ad " + name("e", a) + ")^" + std::to_string(n) + "(" + name("e", b) + ") = 0");
        require_zero(ad_power(s.f[a], s.f[b], n),
                     "(ad " + name("f", a) + ")^" + std::to_string(n) + "(" + name("f", b) + ") = 0");
      }
    }
  }
  s.serre_checked = s.violations.empty();
  return s;
}

LefschetzReport lefschetz_check(const GradedModule& m) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  LefschetzReport report;
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    const Weight& alpha = rs.simple_root(a);
    for (const auto& mu : m.support()) {
      // Pair each slice <., alpha^vee> = l > 0 with the slice -l of the same string,
      // and also catch weights whose partner slice is missing.
      long l = rs.pairing(mu, a);
      if (l < 0) {
        const Weight top = mu + alpha * (-l);
        if (!m.in_support(top)) return LefschetzReport{false, a, top, -l};
        continue;
      }
      if (l == 0) continue;
      const Weight bottom = mu - alpha * l;
      Matrix power = Matrix::identity(m.dim(mu));
      Weight cur = mu;
      for (long k = 0; k < l; ++k) {
        power = multiply(m.lowering_or_zero(a, cur), power, ring);
        cur = cur - alpha;
      }
      if (m.dim(bottom) != m.dim(mu) || rank(power, ring) != m.dim(mu)) {
        return LefschetzReport{false, a, mu, l};
      }
    }
  }
  return report;
}

}  // namespace hrf
