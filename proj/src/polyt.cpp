#include "fps/polyt.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace fps {

PolyT::PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void PolyT::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyT PolyT::constant(const Rational& c) { return PolyT(std::vector<Rational>{c}); }

PolyT PolyT::variable() {
  return PolyT(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational PolyT::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(j)];
}

Rational PolyT::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string PolyT::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    Rational mag = c;
    if (first) {
      if (c < Rational(0)) {
        os << "-";
        mag = -c;
      }
    } else {
      if (c < Rational(0)) {
        os << " - ";
        mag = -c;
      } else {
        os << " + ";
      }
    }
    const bool unit = mag == Rational(1);
    if (j == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "t";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

PolyT operator+(const PolyT& a, const PolyT& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = out[i] + a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
  return PolyT(std::move(out));
}

PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }

PolyT operator-(const PolyT& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = -a.coeffs_[i];
  return PolyT(std::move(out));
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return PolyT();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyT(std::move(out));
}

PolyT operator*(const Rational& c, const PolyT& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
  return PolyT(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const PolyT& p) { return os << p.str(); }

PolyT falling_factorial(int s) {
  if (s < 0) throw UsageError("falling_factorial: s must be >= 0");
  PolyT acc = PolyT::constant(Rational(1));
  const PolyT t = PolyT::variable();
  // Built one factor (t - j) at a time.
  for (int j = 0; j < s; ++j) acc = acc * (t - PolyT::constant(Rational(j)));
  return acc;
}

PolyT binomial_poly(const PolyT& p, unsigned long k) {
  PolyT acc = PolyT::constant(Rational(1));
  for (unsigned long i = 0; i < k; ++i)
    acc = acc * (p - PolyT::constant(Rational(static_cast<long>(i))));
  return Rational(Int(1), factorial(k)) * acc;
}

}  // namespace fps
