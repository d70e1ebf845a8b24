#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace hrf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a ring of characteristic 2 (F_2, or p = 2) is requested.
class CharacteristicTwoError : public std::invalid_argument {
 public:
  CharacteristicTwoError()
      : std::invalid_argument("characteristic 2 is not supported") {}
};

/// Raised on division by a non-invertible element or a malformed scalar.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { Rational, PrimeField, PLocal };

/// Sentinel valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// p-adic valuation of a rational; kInfiniteValuation for zero.
long valuation(const Rational& x, unsigned long p);
long valuation(const Integer& x, unsigned long p);

/// Parses "n", "-n" or "n/d" into a canonical rational.
Rational parse_rational(const std::string& text);
/// Canonical text: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& x);

/// Coefficient ring descriptor.
///
/// Elements of every ring are stored as canonical rationals. Prime-field
/// elements are kept reduced to [0, q). The p-local ring Z_(p) uses ordinary
/// rational arithmetic; its linear algebra is done over the fraction field Q
/// and integrality is a separate valuation query.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rational, 0); }
  static Ring prime_field(unsigned long q);
  static Ring p_local(unsigned long p);

  RingKind kind() const noexcept { return kind_; }
  /// q for F_q, p for Z_(p), 0 for Q.
  unsigned long prime() const noexcept { return prime_; }
  unsigned long characteristic() const noexcept {
    return kind_ == RingKind::PrimeField ? prime_ : 0;
  }
  bool is_field() const noexcept { return kind_ != RingKind::PLocal; }

  /// The field in which linear algebra over this ring is carried out.
  Ring linear_algebra_field() const {
    return kind_ == RingKind::PLocal ? rationals() : *this;
  }

  Rational normalize(const Rational& x) const;
  Rational from_int(long n) const { return normalize(Rational(n)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Inverse in the linear-algebra field; throws ArithmeticError on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  /// Unit test in the ring itself (p-local: valuation zero).
  bool is_unit(const Rational& a) const;
  /// Membership (p-local: denominator coprime to p).
  bool contains(const Rational& a) const;

  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_;
  }

 private:
  Ring(RingKind kind, unsigned long prime) : kind_(kind), prime_(prime) {}

  RingKind kind_;
  unsigned long prime_;
};

bool is_prime(unsigned long n);

/// n! as an exact integer.
Integer factorial(unsigned long n);
/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
Integer binomial(long n, unsigned long k);

}  // namespace hrf
