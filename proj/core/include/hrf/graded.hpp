#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hrf/matrix.hpp"
#include "hrf/roots.hpp"

namespace hrf {

class GradedModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Dimensions = std::map<Weight, std::size_t>;
/// Per-weight blocks of one homogeneous operator, keyed by source weight.
using BlockMap = std::map<Weight, Matrix>;
/// Element of a graded module: coordinates per weight.
using GradedVector = std::map<Weight, std::vector<Rational>>;

/// Homogeneous operator of a fixed degree on a finite-support graded space.
/// A missing block is the zero map.
class GradedOperator {
 public:
  GradedOperator(Weight degree, BlockMap blocks = {})
      : degree_(std::move(degree)), blocks_(std::move(blocks)) {}

  static GradedOperator identity(const Dimensions& dims);
  static GradedOperator diagonal(const Dimensions& dims, const std::map<Weight, Rational>& scalars);

  const Weight& degree() const noexcept { return degree_; }
  const BlockMap& blocks() const noexcept { return blocks_; }
  const Matrix* block(const Weight& src) const;

  /// this o other
  GradedOperator compose(const GradedOperator& other, const Ring& ring) const;
  GradedOperator plus(const GradedOperator& other, const Ring& ring) const;
  GradedOperator scaled(const Rational& s, const Ring& ring) const;
  GradedOperator minus(const GradedOperator& other, const Ring& ring) const {
    return plus(other.scaled(Rational(-1), ring), ring);
  }
  bool is_zero() const;
  GradedVector apply(const GradedVector& v, const Ring& ring) const;

 private:
  Weight degree_;
  BlockMap blocks_;
};

/// Finite-support X-graded free module with lowering operators F_alpha of degree -alpha.
class GradedModule {
 public:
  /// lowering[a] maps source weight mu to the block F_a[mu] : M_mu -> M_{mu - alpha_a}.
  /// Validates shapes and homogeneity; throws GradedModuleError.
  GradedModule(RootSystem rs, Ring ring, Dimensions dims, std::vector<BlockMap> lowering);

  const RootSystem& root_system() const noexcept { return rs_; }
  const Ring& ring() const noexcept { return ring_; }
  const Dimensions& dims() const noexcept { return dims_; }
  std::size_t dim(const Weight& mu) const;
  std::size_t total_dim() const;
  std::vector<Weight> support() const;
  bool in_support(const Weight& mu) const { return dims_.contains(mu); }

  std::size_t num_operators() const noexcept { return lowering_.size(); }
  const BlockMap& lowering_blocks(std::size_t alpha) const { return lowering_.at(alpha); }
  const Matrix* lowering_block(std::size_t alpha, const Weight& mu) const;
  /// F_alpha[mu] or an explicit zero block of the right shape.
  Matrix lowering_or_zero(std::size_t alpha, const Weight& mu) const;
  GradedOperator lowering(std::size_t alpha) const;

  /// Largest n with F_alpha^n possibly nonzero on the support (longest alpha-string span).
  long string_bound(std::size_t alpha) const;

 private:
  RootSystem rs_;
  Ring ring_;
  Dimensions dims_;
  std::vector<BlockMap> lowering_;
};

/// Weight-blockwise Gram matrices; distinct weight spaces are orthogonal by construction.
struct BlockForm {
  std::map<Weight, Matrix> gram;

  const Matrix* block(const Weight& mu) const;
  BlockForm scaled(const Rational& s, const Ring& ring) const;
};

/// Per-weight column bases of a graded subspace.
struct Subspace {
  std::map<Weight, Matrix> basis;

  std::size_t dim(const Weight& mu) const;
  std::size_t total_dim() const;
  Dimensions dims() const;
};

/// Raising blocks E_alpha[mu] : M_mu -> M_{mu + alpha}, indexed by alpha then source weight.
using RaisingOperators = std::vector<BlockMap>;

GradedVector apply_op(const GradedModule& m, std::size_t alpha, const GradedVector& v);

/// Smallest F-stable subspace containing the seed vectors (field coefficients).
Subspace f_closure(const GradedModule& m, const std::vector<GradedVector>& seed);
/// Same, seeded by per-weight column sets.
Subspace f_closure(const GradedModule& m, const std::map<Weight, Matrix>& seed_columns);
/// M_I: F-closure of the weight spaces M_mu with mu in I.
Subspace submodule_MI(const GradedModule& m, const UpSet& set);

/// Contravariant dual relative to the given raising operators: (dM)_mu is the
/// dual of M_mu in the dual basis, dM's f_alpha acts by E_alpha^T and its
/// e_alpha by F_alpha^T.
std::pair<GradedModule, RaisingOperators> contravariant_dual(const GradedModule& m,
                                                             const RaisingOperators& raising);

/// Character mu -> dim M_mu.
Dimensions character(const GradedModule& m);

}  // namespace hrf
