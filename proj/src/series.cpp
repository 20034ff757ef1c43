#include "fps/series.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "fps/partitions.hpp"

namespace fps {

namespace {

void require_same_order(const Series& f, const Series& g, const char* what) {
  if (f.order() != g.order())
    throw UsageError(std::string(what) + ": order mismatch (" +
                     std::to_string(f.order()) + " vs " + std::to_string(g.order()) + ")");
}

long exponent_as_long(const Rational& e) {
  const Int n = e.num();
  if (!n.fits_slong_p()) throw UsageError("series exponent out of range");
  return n.get_si();
}

// Core recurrence for f^e with f(0) != 0:
//   (k+1) g_{k+1} c0 = e * sum_{j<=k} (j+1) f_{j+1} g_{k-j}
//                        - sum_{j<k} (j+1) g_{j+1} f_{k-j}.
Series pow_unit(const Series& f, const Rational& e) {
  const int n = f.order();
  const Rational c0 = f[0];
  std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
  g[0] = e.is_integer() ? c0.pow_int(exponent_as_long(e)) : Rational(1);
  for (int k = 0; k < n; ++k) {
    Rational rhs(0);
    for (int j = 0; j <= k; ++j) {
      if (f[j + 1].is_zero() || g[k - j].is_zero()) continue;
      rhs = rhs + Rational(j + 1) * f[j + 1] * g[k - j];
    }
    rhs = e * rhs;
    for (int j = 0; j < k; ++j) {
      if (g[j + 1].is_zero() || f[k - j].is_zero()) continue;
      rhs = rhs - Rational(j + 1) * g[j + 1] * f[k - j];
    }
    g[k + 1] = rhs / (Rational(k + 1) * c0);
  }
  return Series(std::move(g));
}

}  // namespace

Series::Series(int order) {
  if (order < 0) throw UsageError("series order must be >= 0");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("series needs at least the constant coefficient");
}

const Rational& Series::operator[](int i) const {
  if (i < 0 || i > order())
    throw UsageError("series coefficient index " + std::to_string(i) +
                     " out of range [0, " + std::to_string(order()) + "]");
  return coeffs_[static_cast<size_t>(i)];
}

bool Series::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

int Series::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (!coeffs_[static_cast<size_t>(i)].is_zero()) return i;
  return order() + 1;
}

Series Series::truncated(int new_order) const {
  if (new_order < 0) throw UsageError("series order must be >= 0");
  std::vector<Rational> out(static_cast<size_t>(new_order) + 1, Rational(0));
  const int keep = std::min(new_order, order());
  for (int i = 0; i <= keep; ++i) out[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
  return Series(std::move(out));
}

std::string Series::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= order(); ++i) {
    if (i) os << ", ";
    os << coeffs_[static_cast<size_t>(i)].str();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

Series operator+(const Series& f, const Series& g) {
  require_same_order(f, g, "series addition");
  std::vector<Rational> out(f.coeffs());
  for (int i = 0; i <= g.order(); ++i) out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + g[i];
  return Series(std::move(out));
}

Series operator-(const Series& f, const Series& g) {
  require_same_order(f, g, "series subtraction");
  std::vector<Rational> out(f.coeffs());
  for (int i = 0; i <= g.order(); ++i) out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] - g[i];
  return Series(std::move(out));
}

Series operator-(const Series& f) {
  std::vector<Rational> out(f.coeffs());
  for (auto& c : out) c = -c;
  return Series(std::move(out));
}

Series operator*(const Series& f, const Series& g) {
  require_same_order(f, g, "series multiplication");
  const int n = f.order();
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g[j].is_zero()) continue;
      out[static_cast<size_t>(i + j)] = out[static_cast<size_t>(i + j)] + f[i] * g[j];
    }
  }
  return Series(std::move(out));
}

Series operator*(const Rational& c, const Series& f) {
  std::vector<Rational> out(f.coeffs());
  for (auto& v : out) v = c * v;
  return Series(std::move(out));
}

Series operator+(const Series& f, const Rational& c) {
  std::vector<Rational> out(f.coeffs());
  out[0] = out[0] + c;
  return Series(std::move(out));
}

Series series_pow(const Series& f, const Rational& e) {
  const int n = f.order();
  if (e.is_zero()) return Series(n) + Rational(1);
  if (e.is_integer()) {
    const long k = exponent_as_long(e);
    if (!f[0].is_zero()) return pow_unit(f, e);
    if (k < 0) throw DomainError("negative power of a series with zero constant term");
    // Positive power of a series with valuation v >= 1: factor x^{vk} out.
    const int v = f.valuation();
    if (v > n || static_cast<long>(v) * k > n) return Series(n);
    const int shifted = n - static_cast<int>(v * k);
    std::vector<Rational> h(static_cast<size_t>(shifted) + 1);
    for (int i = 0; i <= shifted; ++i) h[static_cast<size_t>(i)] = f[v + i];
    const Series hk = pow_unit(Series(std::move(h)), e);
    std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= shifted; ++i)
      out[static_cast<size_t>(static_cast<int>(v * k) + i)] = hk[i];
    return Series(std::move(out));
  }
  if (f[0] != Rational(1))
    throw DomainError("rational exponent requires constant term 1, got " + f[0].str());
  return pow_unit(f, e);
}

Series series_compose(const Series& f, const Series& g) {
  require_same_order(f, g, "series composition");
  if (!g[0].is_zero())
    throw DomainError("series composition requires g(0) = 0, got " + g[0].str());
  const int n = f.order();
  // Horner over the truncated ring.
  Series acc = Series(n) + f[n];
  for (int i = n - 1; i >= 0; --i) acc = acc * g + f[i];
  return acc;
}

Series series_reverse_full(const Series& alpha) {
  const int n = alpha.order();
  if (!alpha[0].is_zero())
    throw DomainError("reversion requires a zero constant term");
  if (n < 1 || alpha[1].is_zero())
    throw DomainError("reversion requires a nonzero linear coefficient");
  std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
  g[1] = Rational(1) / alpha[1];
  for (int m = 2; m <= n; ++m) {
    // With g known below degree m (and g_m still zero), the coefficient of
    // x^m in alpha(g) is linear in the unknown g_m with slope alpha_1.
    const Series partial(std::vector<Rational>(g.begin(), g.begin() + m + 1));
    const Series composed = series_compose(alpha.truncated(m), partial);
    g[static_cast<size_t>(m)] = -(composed[m] / alpha[1]);
  }
  return Series(std::move(g));
}

Rational series_reverse_lagrange(const Series& alpha, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("reversion coefficient indices must be positive");
  if (!alpha[0].is_zero())
    throw DomainError("reversion requires a zero constant term");
  if (alpha.order() < 1 || alpha[1].is_zero())
    throw DomainError("reversion requires a nonzero linear coefficient");
  if (k > n) return Rational(0);
  if (n > alpha.order())
    throw UsageError("series order too small: need order >= " + std::to_string(n));
  const int m = n - k;
  std::vector<Rational> h(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) h[static_cast<size_t>(i)] = alpha[i + 1];
  const Series hp = series_pow(Series(std::move(h)), Rational(-static_cast<long>(n)));
  return Rational(k) / Rational(n) * hp[m];
}

PolyT coeff_pow_poly_t(const Series& f, int m) {
  if (m < 1) throw UsageError("coefficient index m must be positive");
  if (m > f.order()) throw UsageError("coefficient index m exceeds the series order");
  if (f[0] != Rational(1))
    throw DomainError("polynomial-in-t coefficients require constant term 1");
  // Falling factorials t(t-1)...(t-s+1) for s = 0..m, built incrementally.
  std::vector<PolyT> ff(static_cast<size_t>(m) + 1);
  ff[0] = PolyT::constant(Rational(1));
  const PolyT t = PolyT::variable();
  for (int s = 1; s <= m; ++s)
    ff[static_cast<size_t>(s)] =
        ff[static_cast<size_t>(s - 1)] * (t - PolyT::constant(Rational(s - 1)));
  PolyT total;
  for_each_multiplicity_vector(m, [&](const MultiplicityVector& mv) {
    Rational scale(1);
    for (int i = 1; i <= m; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      scale = scale * f[i].pow_int(ki) / Rational(factorial(static_cast<unsigned long>(ki)));
      if (scale.is_zero()) break;
    }
    if (scale.is_zero()) return;
    total = total + scale * ff[static_cast<size_t>(mv.weight())];
  });
  return total;
}

Series named_series(std::string_view name, int order,
                    const std::optional<Rational>& param) {
  if (order < 0) throw UsageError("series order must be >= 0");
  if (name != "binomial_t" && param.has_value())
    throw UsageError("series '" + std::string(name) + "' takes no parameter");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  if (name == "exp_minus_1") {
    for (int i = 1; i <= order; ++i)
      c[static_cast<size_t>(i)] = Rational(Int(1), factorial(static_cast<unsigned long>(i)));
  } else if (name == "log1p") {
    for (int i = 1; i <= order; ++i)
      c[static_cast<size_t>(i)] = Rational(Int(i % 2 ? 1 : -1), Int(i));
  } else if (name == "sin") {
    for (int i = 1; i <= order; i += 2) {
      const int j = (i - 1) / 2;
      c[static_cast<size_t>(i)] =
          Rational(Int(j % 2 ? -1 : 1), factorial(static_cast<unsigned long>(i)));
    }
  } else if (name == "arcsin") {
    for (int i = 1; i <= order; i += 2) {
      const unsigned long j = static_cast<unsigned long>((i - 1) / 2);
      // (2j-1)!! / ((2j+1) (2j)!!) with (2j)!! = 2^j j!.
      const Int den = Int(i) * int_pow(Int(2), j) * factorial(j);
      c[static_cast<size_t>(i)] = Rational(odd_double_factorial(j), den);
    }
  } else if (name == "geom") {
    for (int i = 1; i <= order; ++i) c[static_cast<size_t>(i)] = Rational(1);
  } else if (name == "catalan_beta") {
    for (int i = 1; i <= order; ++i)
      c[static_cast<size_t>(i)] = Rational(i % 2 ? i : -i);
  } else if (name == "binomial_t") {
    if (!param.has_value()) throw UsageError("series 'binomial_t' needs a parameter t");
    for (int i = 0; i <= order; ++i)
      c[static_cast<size_t>(i)] = binomial_rat(*param, static_cast<unsigned long>(i));
  } else if (name == "identity") {
    if (order >= 1) c[1] = Rational(1);
  } else {
    throw UsageError("unknown series name '" + std::string(name) + "'");
  }
  return Series(std::move(c));
}

}  // namespace fps
