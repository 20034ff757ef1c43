#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "fps/errors.hpp"

namespace fps {

// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
/// All arithmetic is exact; there is no floating-point path anywhere.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars are pervasive
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);

  /// Parses "p", "-p" or "p/q" (q may carry a sign; the result is
  /// canonicalized). Anything else is a UsageError.
  static Rational parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// The exact integer value; ConsistencyError if not integral.
  Int to_int() const;

  /// "p" or "p/q", matching the parse format.
  std::string str() const { return q_.get_str(); }

  /// Exact integer power; DomainError on a negative power of zero.
  Rational pow_int(long e) const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_));
  }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Int factorial(unsigned long n);

/// (2n-1)!! with the empty-product convention (2*0-1)!! = 1.
Int odd_double_factorial(unsigned long n);

Int int_pow(const Int& base, unsigned long e);

/// Generalized binomial coefficient: upper may be negative,
/// binom(x, k) = x(x-1)...(x-k+1)/k!.
Int binomial(const Int& upper, unsigned long k);

/// Generalized binomial coefficient with rational upper argument.
Rational binomial_rat(const Rational& upper, unsigned long k);

}  // namespace fps
