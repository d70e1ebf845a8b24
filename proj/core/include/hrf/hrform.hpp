#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrf/graded.hpp"
#include "hrf/paths.hpp"

namespace hrf {

/// A Gram block that must be invertible is not.
class SingularGramError : public std::runtime_error {
 public:
  explicit SingularGramError(Weight mu)
      : std::runtime_error("singular Gram block at weight " + mu.to_string()), weight(std::move(mu)) {}
  Weight weight;
};

enum class Check { Pass, Fail, Skipped };
std::string to_string(Check c);

struct CommutatorWitness {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  Weight mu;
};

/// Outcome of checking the four HR axioms.
struct HRReport {
  Check symmetric = Check::Skipped;
  std::optional<Weight> asymmetric_at;
  Check weight_orthogonal = Check::Skipped;
  std::string orthogonality_detail;
  Check commutators = Check::Skipped;
  std::optional<CommutatorWitness> commutator_witness;
  Check closed_restrictions = Check::Skipped;
  /// Weight at which a restriction was found degenerate.
  std::optional<Weight> degenerate_at;
  /// Up-set whose M_I carries the degenerate restriction, when one is known.
  std::optional<UpSet> failing_upset;
  std::string restriction_detail;
  /// User-supplied up-sets that were checked directly.
  std::vector<UpSet> checked_upsets;
  bool overall = false;
};

/// One F-cyclic orthogonal summand, identified with V(highest_weight).
struct Component {
  Weight highest_weight;
  /// Columns are the images F_path(m) of the coset representatives of V(lambda).
  Subspace embedding;
  /// c = (m, m) for the generating vector m.
  Rational scalar;
};

struct DecompositionFailure {
  enum class Kind { SingularBlock, Isotropic, NotComplementary, Mismatch };
  Kind kind;
  Weight weight;
  std::string message;
};

struct DecompositionResult {
  std::vector<Component> components;
  bool certified = false;
  std::optional<DecompositionFailure> failure;

  /// Highest weights with multiplicity, in emission order.
  std::vector<Weight> highest_weights() const;
};

/// Synthesized Lie-algebra action on M.
struct ModuleStructure {
  std::vector<GradedOperator> f;
  std::vector<GradedOperator> e;
  std::vector<GradedOperator> h;
  /// Every defining relation held as an exact operator identity.
  bool serre_checked = false;
  std::vector<std::string> violations;
};

struct LefschetzReport {
  bool pass = true;
  std::size_t alpha = 0;
  Weight mu;  ///< top of the failing slice pair
  long l = 0;
};

/// E_alpha[mu] = G[mu+alpha]^{-1} F_alpha[mu+alpha]^T G[mu]; throws SingularGramError.
RaisingOperators adjoint_family(const GradedModule& m, const BlockForm& form);

/// First (alpha, beta, mu) where [E_alpha, F_beta] differs from delta h_alpha on M_mu.
std::optional<CommutatorWitness> find_commutator_failure(const GradedModule& m, const RaisingOperators& raising);

/// Axioms (1), (3) and (4) directly; axiom (2) through decompose(), plus any
/// explicitly supplied up-sets.
HRReport verify_hr(const GradedModule& m, const BlockForm& form, const std::vector<UpSet>& explicit_upsets = {});

/// Orthogonal decomposition into F-cyclic summands, each matched with V(lambda_i).
DecompositionResult decompose(const GradedModule& m, const BlockForm& form);

/// E from the form, H from the grading, and a check of every defining relation.
/// Throws SingularGramError when the adjoint does not exist.
ModuleStructure synthesize_g_module(const GradedModule& m, const BlockForm& form);

/// F_alpha^l : (M_S)_l -> (M_S)_{-l} is bijective on every alpha-string S (field coefficients).
LefschetzReport lefschetz_check(const GradedModule& m);

/// Gram of the form restricted to a subspace, per weight.
std::map<Weight, Matrix> restricted_gram(const GradedModule& m, const BlockForm& form, const Subspace& s);

/// The form's block at mu, or a zero block when absent.
Matrix gram_or_zero(const GradedModule& m, const BlockForm& form, const Weight& mu);

}  // namespace hrf
