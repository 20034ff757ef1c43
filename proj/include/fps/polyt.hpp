#pragma once

#include <string>
#include <vector>

#include "fps/rational.hpp"

namespace fps {

/// Polynomial in a formal parameter t with exact rational coefficients.
/// Canonical form: trailing zero coefficients are stripped; the zero
/// polynomial has an empty coefficient list and degree -1.
class PolyT {
public:
  PolyT() = default;
  explicit PolyT(std::vector<Rational> coeffs);

  static PolyT constant(const Rational& c);
  static PolyT variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of t^j; zero beyond the degree.
  Rational coeff(int j) const;

  Rational evaluate(const Rational& t) const;

  std::string str() const;

  friend PolyT operator+(const PolyT& a, const PolyT& b);
  friend PolyT operator-(const PolyT& a, const PolyT& b);
  friend PolyT operator-(const PolyT& a);
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator*(const Rational& c, const PolyT& p);
  friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyT& p);

/// t(t-1)...(t-s+1); the empty product for s = 0.
PolyT falling_factorial(int s);

/// binom(p, k) = p(p-1)...(p-k+1)/k! for a polynomial upper argument.
PolyT binomial_poly(const PolyT& p, unsigned long k);

}  // namespace fps
