#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrf/hrform.hpp"

namespace hrf {

/// A Z_(p)-lattice inside a rational graded module: per weight, the columns of
/// basis[mu] form a Z_(p)-basis of M_mu inside (M_Q)_mu.
struct LatticeModule {
  GradedModule ambient;
  std::map<Weight, Matrix> basis;
  unsigned long p = 0;

  /// Identity lattice bases on a module whose coordinates already are lattice coordinates.
  static LatticeModule standard(const GradedModule& m, unsigned long p);

  /// The module in lattice coordinates, over Z_(p).
  GradedModule coordinates() const;
  /// Gram matrices in lattice coordinates from a form given in ambient coordinates.
  BlockForm form_in_coordinates(const BlockForm& ambient_form) const;
};

struct DividedPowerWitness {
  bool raising = false;  ///< E_alpha rather than F_alpha
  std::size_t alpha = 0;
  long n = 0;
  Weight mu;             ///< source weight
  Rational entry;
  long required = 0;     ///< val_p(n!)
};

struct DividedPowerReport {
  bool pass = true;
  bool raising_checked = false;
  std::optional<DividedPowerWitness> witness;
};

struct LatticeInclusion {
  Subspace lattice;  ///< basis columns in lattice coordinates
  bool split = true;
  std::optional<Weight> nonsplit_at;
  long divisor_valuation = 0;  ///< worst elementary-divisor valuation at nonsplit_at
};

struct PadicHRReport {
  Check symmetric = Check::Skipped;
  Check unimodular = Check::Skipped;
  std::optional<Weight> unimodular_fails_at;
  long determinant_valuation = 0;
  Check integral = Check::Skipped;
  std::optional<Weight> nonintegral_at;
  Check weight_orthogonal = Check::Skipped;
  Check commutators = Check::Skipped;
  std::optional<CommutatorWitness> commutator_witness;
  Check faithful = Check::Skipped;
  std::optional<UpSet> unfaithful_upset;
  std::optional<Weight> unfaithful_at;
  /// M_I = M intersected with (M_Q)_I on every checked up-set.
  Check lattice_lemma = Check::Skipped;
  std::optional<UpSet> lemma_fails_for;
  std::vector<UpSet> checked_upsets;
  bool overall = false;
};

struct WeylFiltrationFailure {
  Weight weight;
  std::string message;
};

struct WeylFiltrationReport {
  bool ok = false;
  /// (highest weight, multiplicity) for each nonzero step, in chain order.
  std::vector<std::pair<Weight, long>> steps;
  /// The weight enumeration used to build the chain.
  std::vector<Weight> order;
  std::optional<WeylFiltrationFailure> failure;
};

struct TiltingVerdict {
  Check star_p1 = Check::Skipped;
  std::optional<DividedPowerWitness> star_p1_witness;
  Check star_p2 = Check::Skipped;
  std::optional<UpSet> star_p2_upset;
  std::optional<Weight> star_p2_weight;
  std::optional<PadicHRReport> padic_hr;
  Check self_dual = Check::Skipped;
  std::optional<WeylFiltrationReport> filtration;
  std::optional<WeylFiltrationReport> dual_filtration;
  bool overall = false;
  /// First violated condition, empty on success.
  std::string failure;
};

/// Divided-power integrality: val_p(F_alpha^n) >= val_p(n!) on the lattice for
/// all n up to the support bound; repeated for E_alpha when a perfect form is given.
DividedPowerReport check_divided_powers(const LatticeModule& m, const BlockForm* form = nullptr);

/// F^{(n)}_alpha applied to a block of columns at weight mu (lattice coordinates).
Matrix divided_power_block(const GradedModule& coords, std::size_t alpha, long n, const Weight& mu);

/// Smallest F^{(*)}-stable Z_(p)-sublattice containing M_mu for mu in I, and
/// whether its inclusion into M splits.
LatticeInclusion lattice_MI(const LatticeModule& m, const UpSet& set);

PadicHRReport verify_padic_hr(const LatticeModule& m, const BlockForm& form,
                              const std::vector<UpSet>& explicit_upsets = {});

/// Delta_{Z_(p)}(lambda) inside V(lambda)_Q, with the contravariant form normalized by (v, v) = 1.
std::pair<LatticeModule, BlockForm> weyl_lattice(const RootSystem& rs, const Weight& lambda, unsigned long p);

WeylFiltrationReport weyl_filtration(const LatticeModule& m);

/// Lattice contravariant dual (dual basis; f acts by E^T) with the form G^{-1}.
/// Throws SingularGramError if the form is not invertible.
std::pair<LatticeModule, BlockForm> lattice_contravariant_dual(const LatticeModule& m, const BlockForm& form);

TiltingVerdict verify_tilting(const LatticeModule& m, const BlockForm& form,
                              const std::vector<UpSet>& explicit_upsets = {});

/// Support weights in chain order: larger weights first, ties lexicographically descending.
std::vector<Weight> filtration_order(const RootSystem& rs, const std::vector<Weight>& support);

}  // namespace hrf
