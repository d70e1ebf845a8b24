#pragma once

#include <random>
#include <string>
#include <vector>

#include "hrf/hrform.hpp"
#include "hrf/padic.hpp"

// Fixtures and seeded generators shared by the unit tests and the acceptance binary.

namespace hrf::testing {

struct FormedModule {
  GradedModule module;
  BlockForm form;
};

/// Block-diagonal direct sum; forms add orthogonally.
inline FormedModule direct_sum(const std::vector<FormedModule>& parts) {
  const RootSystem& rs = parts.front().module.root_system();
  const Ring& ring = parts.front().module.ring();
  Dimensions dims;
  for (const auto& p : parts)
    for (const auto& [mu, d] : p.module.dims()) dims[mu] += d;

  // Offset of each part inside each weight space.
  std::vector<std::map<Weight, std::size_t>> offset(parts.size());
  Dimensions used;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [mu, d] : parts[i].module.dims()) {
      offset[i][mu] = used[mu];
      used[mu] += d;
    }

  std::vector<BlockMap> lowering(rs.rank());
  BlockForm form;
  for (const auto& [mu, d] : dims) form.gram.emplace(mu, Matrix(d, d));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const GradedModule& m = parts[i].module;
    for (const auto& [mu, d] : m.dims()) {
      const Matrix* g = parts[i].form.block(mu);
      if (g == nullptr) continue;
      Matrix& dst = form.gram.at(mu);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) dst(offset[i][mu] + r, offset[i][mu] + c) = (*g)(r, c);
    }
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      for (const auto& [mu, f] : m.lowering_blocks(a)) {
        const Weight low = mu - rs.simple_root(a);
        auto it = lowering[a].find(mu);
        if (it == lowering[a].end()) it = lowering[a].emplace(mu, Matrix(dims.at(low), dims.at(mu))).first;
        for (std::size_t r = 0; r < f.rows(); ++r)
          for (std::size_t c = 0; c < f.cols(); ++c) it->second(offset[i][low] + r, offset[i][mu] + c) = f(r, c);
      }
    }
  }
  return {GradedModule(rs, ring, std::move(dims), std::move(lowering)), std::move(form)};
}

/// Per-weight change of basis x = P x': F' = P^{-1} F P, G' = P^T G P.
inline FormedModule change_basis(const FormedModule& fm, const std::map<Weight, Matrix>& p) {
  const GradedModule& m = fm.module;
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  std::vector<BlockMap> lowering(rs.rank());
  for (std::size_t a = 0; a < rs.rank(); ++a)
    for (const auto& [mu, f] : m.lowering_blocks(a)) {
      const Weight low = mu - rs.simple_root(a);
      lowering[a].emplace(mu, multiply(multiply(inverse(p.at(low), ring), f, ring), p.at(mu), ring));
    }
  BlockForm form;
  for (const auto& [mu, g] : fm.form.gram)
    form.gram.emplace(mu, multiply(multiply(p.at(mu).transpose(), g, ring), p.at(mu), ring));
  return {GradedModule(rs, ring, m.dims(), std::move(lowering)), std::move(form)};
}

/// Random invertible integer matrix: unit triangular factors times a signed permutation.
inline Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  Matrix l = Matrix::identity(n);
  Matrix u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = small(rng);
      u(j, i) = small(rng);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix s(n, n);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < n; ++i) s(i, perm[i]) = flip(rng) ? 1 : -1;
  return l * u * s;
}

struct RandomInstance {
  FormedModule data;
  std::vector<Weight> highest_weights;  // multiset, sorted
  std::string description;
};

/// Direct sum of 1..4 standard modules on A1 or A2 with per-weight basis
/// changes and a random nonzero scalar on each summand's form.
inline RandomInstance random_instance(std::mt19937& rng) {
  std::bernoulli_distribution pick_a2(0.5);
  const bool a2 = pick_a2(rng);
  const RootSystem rs = a2 ? RootSystem::A2() : RootSystem::A1();
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> a1_weight(0, 4);
  std::uniform_int_distribution<int> a2_coord(0, 2);
  const std::vector<Rational> scalars{Rational(1), Rational(-1), Rational(2), Rational(-3), Rational(1, 2),
                                      Rational(5, 3)};
  std::uniform_int_distribution<std::size_t> pick_scalar(0, scalars.size() - 1);

  RandomInstance out{{GradedModule(rs, Ring::rationals(), {}, {}), {}}, {}, rs.label() + ":"};
  std::vector<FormedModule> parts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Weight lambda = a2 ? Weight{a2_coord(rng), a2_coord(rng)} : Weight{a1_weight(rng)};
    if (a2 && lambda == Weight{2, 2}) lambda = Weight{2, 1};  // keep sizes modest
    StandardModule v = standard_module(rs, Ring::rationals(), lambda);
    const Rational c = scalars[pick_scalar(rng)];
    parts.push_back({v.module, v.form.scaled(c, Ring::rationals())});
    out.highest_weights.push_back(lambda);
    out.description += " " + lambda.to_string() + "*" + format_rational(c);
  }
  std::sort(out.highest_weights.begin(), out.highest_weights.end());
  FormedModule sum = direct_sum(parts);
  std::map<Weight, Matrix> p;
  for (const auto& [mu, d] : sum.module.dims()) p.emplace(mu, random_invertible(d, rng));
  out.data = change_basis(sum, p);
  return out;
}

}  // namespace hrf::testing
