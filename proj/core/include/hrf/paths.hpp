#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hrf/graded.hpp"

namespace hrf {

/// Word (alpha_{i_1}, ..., alpha_{i_l}) of 0-based simple-root indices.
struct SimpleRootPath {
  std::vector<std::size_t> word;

  std::size_t length() const noexcept { return word.size(); }
  /// Sum of the roots in the word, in simple-root coordinates.
  std::vector<long> root_content(std::size_t rank) const;
  Weight height(const RootSystem& rs) const;
  SimpleRootPath reversed() const;
  /// The word with position i (0-based) deleted.
  SimpleRootPath without(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const SimpleRootPath&, const SimpleRootPath&) = default;
  friend auto operator<=>(const SimpleRootPath&, const SimpleRootPath&) = default;
};

/// Formal linear combination of paths with rational coefficients.
using PathVector = std::map<SimpleRootPath, Rational>;

/// All words whose root multiset sums to lambda - mu, in lexicographic order.
std::vector<SimpleRootPath> enumerate_paths(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// phi_alpha: prepend alpha.
PathVector phi(std::size_t alpha, const PathVector& v);
/// epsilon_alpha(g_1..g_l) = sum_{i : g_i = alpha} <lambda - g_{i+1} - ... - g_l, alpha^vee> g^{(i)}.
PathVector epsilon(const RootSystem& rs, const Weight& lambda, std::size_t alpha, const PathVector& v);

/// Canonical symmetric form on P(lambda), evaluated by the memoized recursion
///   (a, b) = sum_{i : a_i = b_1} <mu + a_{i-1} + ... + a_1, b_1^vee> (a^{(i)}, b^{(1)}),
/// mu = lambda - ht(b) + b_1, with (empty, empty) = 1. Entries are integers.
class PathGram {
 public:
  PathGram(RootSystem rs, Weight lambda);

  Integer entry(const SimpleRootPath& a, const SimpleRootPath& b);
  /// Gram matrix on enumerate_paths(lambda, mu).
  Matrix block(const Weight& mu);
  Matrix block(const std::vector<SimpleRootPath>& basis);

  const Weight& highest_weight() const noexcept { return lambda_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  Integer recurse(const std::string& a, const std::string& b);

  RootSystem rs_;
  Weight lambda_;
  std::unordered_map<std::string, Integer> memo_;
};

Rational gram_entry(const RootSystem& rs, const Weight& lambda, const SimpleRootPath& a, const SimpleRootPath& b);
Matrix gram_block(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// V(lambda) = P(lambda)/rad, truncated at the given depth.
struct StandardModule {
  GradedModule module;
  BlockForm form;
  /// Coset representatives spanning V(lambda)_mu, in basis order.
  std::map<Weight, std::vector<SimpleRootPath>> representatives;
  Weight highest_weight;
  long depth = 0;
  /// True when the deepest explored level was still nonzero, so weights below
  /// the truncation may be missing.
  bool truncated = false;
};

/// Height of lambda - w0(lambda); requires dominant lambda.
long default_depth(const RootSystem& rs, const Weight& lambda);

/// Builds V(lambda) over the ring. depth may be omitted only for dominant
/// lambda over a characteristic-0 ring; throws CharacteristicTwoError,
/// std::invalid_argument otherwise.
StandardModule standard_module(const RootSystem& rs, const Ring& ring, const Weight& lambda,
                               std::optional<long> depth = std::nullopt);

}  // namespace hrf
