#include "hrf/scalar.hpp"

#include <cctype>

namespace hrf {

long valuation(const Integer& x, unsigned long p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  Integer n = abs(x);
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long valuation(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Rational parse_rational(const std::string& text) {
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ArithmeticError("malformed rational '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (sgn(d) == 0) throw ArithmeticError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational x = value;
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(unsigned long q) {
  if (q == 2) throw CharacteristicTwoError();
  if (!is_prime(q)) throw std::invalid_argument("F_q requires a prime q, got " + std::to_string(q));
  return Ring(RingKind::PrimeField, q);
}

Ring Ring::p_local(unsigned long p) {
  if (p == 2) throw CharacteristicTwoError();
  if (!is_prime(p)) throw std::invalid_argument("Z_(p) requires a prime p, got " + std::to_string(p));
  return Ring(RingKind::PLocal, p);
}

Rational Ring::normalize(const Rational& x) const {
  if (kind_ != RingKind::PrimeField) return x;
  Integer q(prime_);
  Integer den = x.get_den();
  Integer den_mod = den % q;
  if (sgn(den_mod) == 0) {
    throw ArithmeticError(format_rational(x) + " has no image in F_" + std::to_string(prime_));
  }
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), q.get_mpz_t());
  Integer r = (x.get_num() * den_inv) % q;
  if (sgn(r) < 0) r += q;
  return Rational(r);
}

Rational Ring::add(const Rational& a, const Rational& b) const {
  Rational r = a + b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Rational Ring::sub(const Rational& a, const Rational& b) const {
  Rational r = a - b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Rational Ring::mul(const Rational& a, const Rational& b) const {
  Rational r = a * b;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Rational Ring::neg(const Rational& a) const {
  Rational r = -a;
  return kind_ == RingKind::PrimeField ? normalize(r) : r;
}

Rational Ring::inv(const Rational& a) const {
  if (sgn(a) == 0) throw ArithmeticError("division by zero");
  if (kind_ == RingKind::PrimeField) {
    Integer q(prime_);
    Integer n = a.get_num() % q;
    if (sgn(n) < 0) n += q;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()) == 0) {
      throw ArithmeticError("division by zero");
    }
    return Rational(r);
  }
  return 1 / a;
}

bool Ring::is_unit(const Rational& a) const {
  if (sgn(a) == 0) return false;
  if (kind_ == RingKind::PLocal) return valuation(a, prime_) == 0;
  return true;
}

bool Ring::contains(const Rational& a) const {
  switch (kind_) {
    case RingKind::Rational:
      return true;
    case RingKind::PrimeField:
      return a.get_den() == 1 && sgn(a) >= 0 && a.get_num() < Integer(prime_);
    case RingKind::PLocal:
      return valuation(Integer(a.get_den()), prime_) == 0;
  }
  return false;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Rational:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(prime_);
    case RingKind::PLocal:
      return "Z" + std::to_string(prime_);
  }
  return "?";
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, unsigned long k) {
  Integer r;
  Integer top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

}  // namespace hrf
