#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hrf/matrix.hpp"

namespace hrf {

/// Integral weight in fundamental-weight coordinates: mu = sum m_i varpi_i,
/// so <mu, alpha_i^vee> = coords[i].
struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<long> c) : coords(c) {}

  std::size_t rank() const noexcept { return coords.size(); }
  long operator[](std::size_t i) const { return coords[i]; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(long k) const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  /// Lexicographic on coordinates; used for ordered containers and tie-breaks.
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cartan data of a finite crystallographic root system.
/// cartan[i][j] = <alpha_j, alpha_i^vee>; alpha_j in weight coordinates is column j.
class RootSystem {
 public:
  /// Validates the Cartan matrix; throws RootSystemError.
  RootSystem(std::vector<std::vector<long>> cartan, std::string label = "");

  static RootSystem A1() { return from_type("A1"); }
  static RootSystem A2() { return from_type("A2"); }
  static RootSystem B2() { return from_type("B2"); }
  static RootSystem G2() { return from_type("G2"); }
  /// "A1".."A8", "B2".., "C2".., "G2", and products like "A1xA1".
  static RootSystem from_type(const std::string& label);
  static RootSystem product(const RootSystem& a, const RootSystem& b);

  std::size_t rank() const noexcept { return cartan_.size(); }
  const std::vector<std::vector<long>>& cartan() const noexcept { return cartan_; }
  long cartan_entry(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::string& label() const noexcept { return label_; }

  /// <mu, alpha_i^vee>; throws std::out_of_range for a bad index.
  long pairing(const Weight& mu, std::size_t i) const;
  /// alpha_j in fundamental-weight coordinates.
  const Weight& simple_root(std::size_t j) const { return simple_roots_.at(j); }
  Weight zero() const { return Weight(std::vector<long>(rank(), 0)); }
  Weight rho() const { return Weight(std::vector<long>(rank(), 1)); }

  /// Coordinates of mu in the simple-root basis (A^{-1} mu).
  std::vector<Rational> root_coordinates(const Weight& mu) const;
  /// Nonnegative integer root coordinates of mu, if mu is a N-combination of simple roots.
  std::optional<std::vector<long>> nonnegative_root_coordinates(const Weight& mu) const;
  /// sum_j x_j alpha_j
  Weight from_root_coordinates(const std::vector<long>& x) const;
  /// Sum of root coordinates (rational in general).
  Rational height(const Weight& mu) const;

  /// lambda <= mu iff mu - lambda is a nonnegative integer sum of simple roots.
  bool leq(const Weight& lambda, const Weight& mu) const;
  bool is_dominant(const Weight& mu) const;

  /// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i
  Weight reflect(const Weight& mu, std::size_t i) const;
  /// The unique antidominant weight in the Weyl orbit of mu (w0 mu for dominant mu).
  Weight antidominant_conjugate(const Weight& mu) const;

  /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
  const std::vector<std::vector<long>>& positive_roots() const noexcept { return positive_roots_; }
  /// Symmetrizer d_i = (alpha_i, alpha_i)/2 with the shortest root of each
  /// component normalized to d = 1.
  const std::vector<Rational>& symmetrizer() const noexcept { return symmetrizer_; }
  /// Invariant form (mu, nu) on weights, normalized via symmetrizer().
  Rational inner_product(const Weight& mu, const Weight& nu) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.cartan_ == b.cartan_; }

 private:
  std::vector<std::vector<long>> cartan_;
  std::string label_;
  Matrix cartan_inverse_;
  std::vector<Weight> simple_roots_;
  std::vector<std::vector<long>> positive_roots_;
  std::vector<Rational> symmetrizer_;
  Matrix weight_gram_;  // (varpi_i, varpi_j)
};

/// Positive roots of the system with the given Cartan matrix, in simple-root coordinates.
std::vector<std::vector<long>> enumerate_positive_roots(const std::vector<std::vector<long>>& cartan);

/// Upward-closed subset of X described by finitely many generators.
struct UpSet {
  std::vector<Weight> generators;

  static UpSet principal(const Weight& mu) { return UpSet{{mu}}; }
  bool contains(const RootSystem& rs, const Weight& mu) const;
  std::string to_string() const;
};

inline bool upset_contains(const RootSystem& rs, const UpSet& set, const Weight& mu) {
  return set.contains(rs, mu);
}

}  // namespace hrf
