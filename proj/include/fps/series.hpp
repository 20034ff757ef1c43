#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fps/polyt.hpp"
#include "fps/rational.hpp"

namespace fps {

/// Dense truncated formal power series: coeffs()[i] is the coefficient of
/// x^i and the series is known modulo x^{order+1}. Values are immutable
/// after construction. Binary operations require equal orders; callers pad
/// or truncate explicitly via truncated().
class Series {
public:
  /// Zero series of the given order.
  explicit Series(int order);
  /// order = coeffs.size() - 1; the list must be non-empty.
  explicit Series(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const;

  bool is_zero() const;
  /// Index of the first nonzero coefficient; order+1 for the zero series.
  int valuation() const;

  /// Copy cut down or zero-padded to the requested order.
  Series truncated(int new_order) const;

  std::string str() const;

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
/// Cauchy product truncated to the common order.
Series operator*(const Series& f, const Series& g);
Series operator*(const Rational& c, const Series& f);
/// Adds a constant to the coefficient of x^0.
Series operator+(const Series& f, const Rational& c);

/// f^e mod x^{order+1} by the first-order recurrence from (f^e)' f = e f' f^e.
/// Integer e >= 0 works for any f (the valuation is factored out first);
/// negative integer e needs f(0) != 0; a non-integer rational e needs
/// f(0) == 1 so every coefficient stays rational.
Series series_pow(const Series& f, const Rational& e);
inline Series series_pow(const Series& f, long e) { return series_pow(f, Rational(e)); }

/// f(g(x)) mod x^{order+1}; requires g(0) = 0 and equal orders.
Series series_compose(const Series& f, const Series& g);

/// Compositional inverse of alpha (alpha(0) = 0, alpha'(0) != 0), solved
/// coefficient by coefficient from alpha(g(x)) = x. Deliberately does not
/// share code with series_reverse_lagrange: each is the other's oracle.
Series series_reverse_full(const Series& alpha);

/// [x^n] (alpha^{-1})^k = (k/n) [x^{n-k}] (alpha(x)/x)^{-n}, exact.
/// Returns 0 for k > n.
Rational series_reverse_lagrange(const Series& alpha, int n, int k);

/// [x^m] f(x)^t as a polynomial in t of degree <= m, for f with f(0) = 1,
/// assembled from the partition sum over multiplicity vectors of m.
PolyT coeff_pow_poly_t(const Series& f, int m);

/// Catalog of stock expansions with exact rational coefficients:
///   exp_minus_1, log1p, sin, arcsin, geom (x/(1-x)),
///   catalan_beta (x/(1+x)^2), binomial_t ((1+x)^t, takes param),
///   identity (x).
Series named_series(std::string_view name, int order,
                    const std::optional<Rational>& param = std::nullopt);

}  // namespace fps
