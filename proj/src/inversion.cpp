#include "fps/inversion.hpp"

#include <string>
#include <utility>

#include "fps/partitions.hpp"

namespace fps {

namespace {

std::vector<Int> factorials_up_to(unsigned long n) {
  std::vector<Int> f(n + 1);
  f[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) f[i] = f[i - 1] * static_cast<long>(i);
  return f;
}

}  // namespace

TransformKernel::TransformKernel(int size, KernelDirection direction,
                                 std::string descriptor,
                                 std::vector<std::vector<Rational>> rows)
    : direction_(direction), descriptor_(std::move(descriptor)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != size)
    throw UsageError("kernel rows do not match the declared size");
  for (int n = 1; n <= size; ++n)
    if (static_cast<int>(rows_[static_cast<size_t>(n - 1)].size()) != n)
      throw UsageError("kernel row " + std::to_string(n) + " has the wrong length");
}

const Rational& TransformKernel::at(int n, int m) const {
  if (n < 1 || n > size() || m < 1 || m > n)
    throw UsageError("kernel index out of range: need 1 <= m <= n <= size");
  return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(m - 1)];
}

TransformKernel build_kernel(const Series& f, int size, KernelDirection direction) {
  if (size < 1) throw UsageError("kernel size must be >= 1");
  if (f[0].is_zero())
    throw DomainError("kernel series needs a nonzero constant term");
  if (f.order() < size - 1)
    throw UsageError("kernel series order too small: need >= " + std::to_string(size - 1));
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(size));
  for (int n = 1; n <= size; ++n)
    rows[static_cast<size_t>(n - 1)].assign(static_cast<size_t>(n), Rational(0));
  if (direction == KernelDirection::forward) {
    const Series base = f.truncated(size - 1);
    Series power = base;
    for (int m = 1; m <= size; ++m) {
      for (int n = m; n <= size; ++n)
        rows[static_cast<size_t>(n - 1)][static_cast<size_t>(m - 1)] = power[n - m];
      if (m < size) power = power * base;
    }
  } else {
    for (int n = 1; n <= size; ++n) {
      const Series power = series_pow(f.truncated(n - 1), Rational(-static_cast<long>(n)));
      for (int m = 1; m <= n; ++m)
        rows[static_cast<size_t>(n - 1)][static_cast<size_t>(m - 1)] = power[n - m];
    }
  }
  const char* tag = direction == KernelDirection::forward ? "forward" : "inverse";
  return TransformKernel(size, direction,
                         std::string(tag) + " kernel, size " + std::to_string(size),
                         std::move(rows));
}

RationalSequence transform_apply(const TransformKernel& kernel, const RationalSequence& s) {
  if (s.offset != 1)
    throw UsageError("triangular transforms act on 1-based sequences");
  const int len = std::min(s.length(), kernel.size());
  std::vector<Rational> out(static_cast<size_t>(len), Rational(0));
  for (int n = 1; n <= len; ++n) {
    Rational acc(0);
    for (int m = 1; m <= n; ++m) {
      const Rational& v = s.values[static_cast<size_t>(m - 1)];
      if (v.is_zero()) continue;
      acc = acc + kernel.at(n, m) * v;
    }
    out[static_cast<size_t>(n - 1)] = kernel.direction() == KernelDirection::forward
                                          ? Rational(n) * acc
                                          : acc / Rational(n);
  }
  return RationalSequence{1, std::move(out)};
}

RationalSequence binomial_involution(int k, const RationalSequence& s) {
  if (k < 1) throw UsageError("involution: k must be >= 1");
  if (s.offset != 0)
    throw UsageError("the sectioned involution acts on 0-based sequences");
  for (int i = 0; i < s.length(); ++i) {
    if (i % k != 0 && !s.values[static_cast<size_t>(i)].is_zero())
      throw DomainError(
          "sequence has support at index " + std::to_string(i) +
          " which is not a multiple of " + std::to_string(k) +
          "; off that support the defining sum does not terminate");
  }
  std::vector<Rational> out(static_cast<size_t>(s.length()), Rational(0));
  for (int n = 0; n < s.length(); n += k) {
    const unsigned long row = static_cast<unsigned long>(n / k);
    Rational acc(0);
    for (int m = 0; m < s.length(); m += k) {
      const Rational& v = s.values[static_cast<size_t>(m)];
      if (v.is_zero()) continue;
      acc = acc + Rational(binomial(Int(m / k), row)) * v;
    }
    out[static_cast<size_t>(n)] = (row % 2 != 0) ? -acc : acc;
  }
  return RationalSequence{0, std::move(out)};
}

std::pair<Rational, Rational> orthogonality_sums(const Series& f, int k, int n) {
  if (k < 1 || n < 1 || k > n) throw UsageError("orthogonality sums: need 1 <= k <= n");
  if (n > f.order()) throw UsageError("orthogonality sums: series order too small");
  if (f[0].is_zero()) throw DomainError("orthogonality sums need f(0) != 0");
  const Series f_k = series_pow(f.truncated(n - k), static_cast<long>(k));
  const Series f_neg_n = series_pow(f.truncated(n - k), Rational(-static_cast<long>(n)));
  Rational first(0);
  Rational second(0);
  for (int m = k; m <= n; ++m) {
    const Series f_m = series_pow(f.truncated(n - m), static_cast<long>(m));
    const Series f_neg_m = series_pow(f.truncated(m - k), Rational(-static_cast<long>(m)));
    first = first + Rational(1) / Rational(m) * f_m[n - m] * f_neg_m[m - k];
    second = second + Rational(m) * f_k[m - k] * f_neg_n[n - m];
  }
  return {first, second};
}

Rational inverse_power_coefficient(const Series& beta, int m, int n) {
  if (m < 1 || n < 1) throw UsageError("inverse power coefficient: need m, n >= 1");
  if (!beta[0].is_zero())
    throw DomainError("inverse power coefficient: beta must vanish at 0");
  if (beta.order() < n + 1)
    throw UsageError("inverse power coefficient: beta order must be >= n+1");
  const Rational b0 = beta[1];
  if (b0.is_zero())
    throw DomainError("inverse power coefficient: beta'(0) must be nonzero");
  const auto fact = factorials_up_to(static_cast<unsigned long>(2 * n + m));
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Rational term(fact[static_cast<size_t>(n + m - 1 + w)]);
    for (int i = 1; i <= n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      // beta = x * sum b_i x^i, so b_i sits at series index i+1.
      term = term * beta[i + 1].pow_int(ki) /
             Rational(fact[static_cast<size_t>(ki)]);
      if (term.is_zero()) break;
    }
    if (term.is_zero()) return;
    term = term * b0.pow_int(-(static_cast<long>(n) + m + w));
    if (w % 2 != 0) term = -term;
    sum = sum + term;
  });
  return Rational(m) / Rational(fact[static_cast<size_t>(n + m)]) * sum;
}

std::vector<Rational> inverse_pair_transform(const std::vector<Rational>& alpha_coeffs, int N) {
  if (N < 0) throw UsageError("inverse pair transform: order must be >= 0");
  if (static_cast<int>(alpha_coeffs.size()) > N)
    throw UsageError("inverse pair transform: more coefficients than the order allows");
  std::vector<Rational> a(alpha_coeffs);
  a.resize(static_cast<size_t>(N), Rational(0));
  const auto fact = factorials_up_to(static_cast<unsigned long>(2 * N + 1));
  std::vector<Rational> out(static_cast<size_t>(N), Rational(0));
  for (int n = 1; n <= N; ++n) {
    Rational sum(0);
    for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
      Rational prod(fact[static_cast<size_t>(mv.weight() + n)]);
      for (int i = 1; i <= n; ++i) {
        const long ki = mv.k[static_cast<size_t>(i - 1)];
        if (ki == 0) continue;
        prod = prod * a[static_cast<size_t>(i - 1)].pow_int(ki) /
               Rational(fact[static_cast<size_t>(ki)]);
        if (prod.is_zero()) break;
      }
      sum = sum + prod;
    });
    Rational b = sum / Rational(fact[static_cast<size_t>(n + 1)]);
    if (n % 2 == 0) b = -b;  // sign (-1)^{n+1}
    out[static_cast<size_t>(n - 1)] = b;
  }
  return out;
}

Series SelfInverseSeries::to_series() const {
  std::vector<Rational> c(static_cast<size_t>(order) + 2, Rational(0));
  c[1] = Rational(-1);
  for (int j = 1; j <= order; ++j)
    c[static_cast<size_t>(j + 1)] = coeffs[static_cast<size_t>(j - 1)];
  return Series(std::move(c));
}

Rational self_inverse_partial_sum(const std::vector<Rational>& coeffs, int n) {
  if (n < 1) throw UsageError("partial sum: n must be >= 1");
  if (static_cast<int>(coeffs.size()) < n - 1)
    throw UsageError("partial sum: need coefficients up to index n-1");
  const auto fact = factorials_up_to(static_cast<unsigned long>(2 * n));
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    if (mv.k[static_cast<size_t>(n - 1)] > 0) return;  // parts restricted to < n
    Rational prod(fact[static_cast<size_t>(mv.weight() + n)]);
    for (int i = 1; i < n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      prod = prod * coeffs[static_cast<size_t>(i - 1)].pow_int(ki) /
             Rational(fact[static_cast<size_t>(ki)]);
      if (prod.is_zero()) break;
    }
    sum = sum + prod;
  });
  return sum;
}

SelfInverseSeries self_inverse_complete(const std::vector<Rational>& odd_coeffs, int N) {
  if (N < 0) throw UsageError("self-inverse completion: order must be >= 0");
  if (static_cast<int>(odd_coeffs.size()) > (N + 1) / 2)
    throw UsageError("self-inverse completion: odd coefficient list too long for the order");
  std::vector<Rational> a(static_cast<size_t>(N), Rational(0));
  for (size_t j = 0; j < odd_coeffs.size(); ++j)
    a[2 * j] = odd_coeffs[j];  // index 2j+1 lands at position 2j
  const auto fact = factorials_up_to(static_cast<unsigned long>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    const Rational sum = self_inverse_partial_sum(a, n);
    if (n % 2 != 0) {
      // Depends only on already-fixed coefficients; must vanish.
      if (!sum.is_zero())
        throw ConsistencyError("self-inverse completion: odd-index sum " +
                               std::to_string(n) + " is " + sum.str() + ", expected 0");
    } else {
      const Int two_fact = 2 * fact[static_cast<size_t>(n + 1)];
      a[static_cast<size_t>(n - 1)] = -(sum / Rational(two_fact));
    }
  }
  return SelfInverseSeries{N, std::move(a)};
}

std::array<Rational, 4> self_inverse_low_even_coeffs(const Rational& a1, const Rational& a3,
                                                     const Rational& a5, const Rational& a7) {
  const Rational a2 = -(a1 * a1);
  const Rational a4 = Rational(2) * a1.pow_int(4) - Rational(3) * a1 * a3;
  const Rational a6 = Rational(-13) * a1.pow_int(6) - Rational(4) * a1 * a5 -
                      Rational(2) * a3 * a3 + Rational(18) * a1.pow_int(3) * a3;
  const Rational a8 = Rational(145) * a1.pow_int(8) - Rational(221) * a1.pow_int(5) * a3 +
                      Rational(50) * a1 * a1 * a3 * a3 + Rational(35) * a1.pow_int(3) * a5 -
                      Rational(5) * a3 * a5 - Rational(5) * a1 * a7;
  return {a2, a4, a6, a8};
}

}  // namespace fps
