#include "fps/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace fps {

namespace {

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// mpz_set_str rejects an explicit plus sign.
std::string_view drop_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return s;
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part =
      slash == std::string_view::npos ? text : text.substr(0, slash);
  if (!is_signed_digits(num_part))
    throw UsageError("invalid rational literal: '" + std::string(text) + "'");
  const Int num{std::string(drop_plus(num_part))};
  if (slash == std::string_view::npos) return Rational(num);
  const std::string_view den_part = text.substr(slash + 1);
  if (!is_signed_digits(den_part))
    throw UsageError("invalid rational literal: '" + std::string(text) + "'");
  const Int den{std::string(drop_plus(den_part))};
  if (sgn(den) == 0)
    throw UsageError("invalid rational literal (zero denominator): '" +
                     std::string(text) + "'");
  return Rational(num, den);
}

Int Rational::to_int() const {
  if (!is_integer())
    throw ConsistencyError("expected an integral value, got " + str());
  return num();
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool negative = e < 0;
  // Avoids overflow on LONG_MIN.
  const unsigned long mag =
      negative ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  if (negative && is_zero()) throw DomainError("negative power of zero");
  Int n = int_pow(num(), mag);
  Int d = int_pow(den(), mag);
  return negative ? Rational(d, n) : Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int odd_double_factorial(unsigned long n) {
  if (n == 0) return Int(1);
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int binomial(const Int& upper, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), upper.get_mpz_t(), k);
  return r;
}

Rational binomial_rat(const Rational& upper, unsigned long k) {
  Rational prod(1);
  for (unsigned long i = 0; i < k; ++i)
    prod = prod * (upper - Rational(static_cast<long>(i)));
  return prod / Rational(factorial(k));
}

}  // namespace fps
