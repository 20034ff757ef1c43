#include "fps/stirling.hpp"

#include <mutex>
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

void check_args(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw UsageError("stirling: need 0 <= k <= n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
}

void append_rows(std::vector<std::vector<Int>>& rows, StirlingKind kind, int max_n) {
  if (rows.empty()) rows.push_back({Int(1)});
  for (int n = static_cast<int>(rows.size()); n <= max_n; ++n) {
    std::vector<Int> row(static_cast<size_t>(n) + 1, Int(0));
    const auto& prev = rows.back();
    for (int k = 1; k <= n; ++k) {
      Int above = (k <= n - 1) ? prev[static_cast<size_t>(k)] : Int(0);
      const long mult = kind == StirlingKind::second ? k : n - 1;
      row[static_cast<size_t>(k)] = prev[static_cast<size_t>(k - 1)] + mult * above;
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, int max_n) : kind_(kind) {
  if (max_n < 0) throw UsageError("stirling table: max_n must be >= 0");
  append_rows(rows_, kind, max_n);
}

const Int& StirlingTable::at(int n, int k) const {
  check_args(n, k);
  if (n > max_n())
    throw UsageError("stirling table only built up to n=" + std::to_string(max_n()));
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int stirling_recurrence(StirlingKind kind, int n, int k) {
  check_args(n, k);
  static std::mutex mutex;
  static std::vector<std::vector<Int>> cache[2];
  std::lock_guard<std::mutex> lock(mutex);
  auto& rows = cache[kind == StirlingKind::second ? 1 : 0];
  if (static_cast<int>(rows.size()) <= n) append_rows(rows, kind, n);
  return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int stirling_via_gf(StirlingKind kind, int n, int m) {
  if (m < 1 || m > n)
    throw UsageError("stirling gf route: need 1 <= m <= n");
  const Series base = kind == StirlingKind::second ? named_series("exp_minus_1", n)
                                                   : named_series("log1p", n);
  const Series power = series_pow(base, static_cast<long>(m));
  Rational value = power[n] * Rational(factorial(static_cast<unsigned long>(n))) /
                   Rational(factorial(static_cast<unsigned long>(m)));
  if (kind == StirlingKind::first_unsigned && (n - m) % 2 != 0) value = -value;
  Int result = value.to_int();
  if (sgn(result) < 0)
    throw ConsistencyError("generating-function route produced a negative value");
  return result;
}

Int stirling_partition_formula(StirlingKind kind, int n, int m) {
  if (n < 0 || m < 1)
    throw UsageError("stirling partition formula: need n >= 0 and m >= 1");
  const auto fact = factorials_up_to(static_cast<unsigned long>(2 * n + m));
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Int denom(1);
    for (int i = 1; i <= n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      const Int base = kind == StirlingKind::second
                           ? Int(i + 1)
                           : fact[static_cast<size_t>(i + 1)];
      denom *= int_pow(base, static_cast<unsigned long>(ki)) *
               fact[static_cast<size_t>(ki)];
    }
    Rational term(fact[static_cast<size_t>(w + n + m - 1)], denom);
    if (w % 2 != 0) term = -term;
    sum = sum + term;
  });
  Rational total = sum / Rational(fact[static_cast<size_t>(m - 1)]);
  if (n % 2 != 0) total = -total;
  Int result = total.to_int();
  if (sgn(result) < 0)
    throw ConsistencyError("partition formula produced a negative value");
  return result;
}

Int stirling_shift(StirlingKind kind, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("stirling shift: need n, k >= 1");
  Int acc(0);
  for (int r = 1; r <= k; ++r) {
    acc += binomial(Int(k - n), static_cast<unsigned long>(k - r)) *
           binomial(Int(k + n), static_cast<unsigned long>(k + r)) *
           stirling_recurrence(kind, k + r, r);
  }
  return acc;
}

Int surjection_sum(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("surjection sum: need m, n >= 1");
  Int acc(0);
  for (int r = 0; r <= m; ++r) {
    const Int term = binomial(Int(m), static_cast<unsigned long>(r)) *
                     int_pow(Int(r), static_cast<unsigned long>(m + n));
    acc += ((m - r) % 2 != 0) ? -term : term;
  }
  return acc;
}

EgfTriangle::EgfTriangle(Series base, int max_n)
    : base_(std::move(base)), max_n_(max_n) {
  if (max_n < 1) throw UsageError("egf triangle: max_n must be >= 1");
  if (base_.order() < max_n)
    throw UsageError("egf triangle: base order too small for max_n");
  if (!base_[0].is_zero() || base_[1] != Rational(1))
    throw DomainError("egf triangle base must start x + a_2 x^2 + ...");
  const auto fact = factorials_up_to(static_cast<unsigned long>(max_n));
  rows_.resize(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n)
    rows_[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, Rational(0));
  const Series a = base_.truncated(max_n);
  Series power = a;
  for (int m = 1; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n)
      rows_[static_cast<size_t>(n)][static_cast<size_t>(m)] =
          power[n] * Rational(fact[static_cast<size_t>(n)], fact[static_cast<size_t>(m)]);
    if (m < max_n) power = power * a;
  }
}

Rational EgfTriangle::at(int n, int m) const {
  if (n < 0 || m < 1 || n > max_n_ || m > max_n_)
    throw UsageError("egf triangle index out of range");
  if (n < m) return Rational(0);
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

Rational egf_triangle_entry(const Series& a, int n, int m) {
  if (n < 0 || m < 1) throw UsageError("egf entry: need n >= 0 and m >= 1");
  if (a.order() < n) throw UsageError("egf entry: series order too small");
  if (!a[0].is_zero() || a.order() < 1 || a[1] != Rational(1))
    throw DomainError("egf base must start x + a_2 x^2 + ...");
  if (n < m) return Rational(0);
  const Series power = series_pow(a.truncated(n), static_cast<long>(m));
  return power[n] * Rational(factorial(static_cast<unsigned long>(n)),
                             factorial(static_cast<unsigned long>(m)));
}

Rational egf_triangle_shift(const Series& a, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("egf shift: need n, k >= 1");
  if (a.order() < n + k)
    throw UsageError("egf shift: series order too small, need >= " + std::to_string(n + k));
  return egf_triangle_entry(a, n + k, n);
}

Rational egf_shift_rhs(const Series& a, int n, int k) {
  if (n < 1 || k < 1) throw UsageError("egf shift: need n, k >= 1");
  Rational acc(0);
  for (int r = 1; r <= k; ++r) {
    const Int weight = binomial(Int(k - n), static_cast<unsigned long>(k - r)) *
                       binomial(Int(k + n), static_cast<unsigned long>(k + r));
    if (sgn(weight) == 0) continue;
    acc = acc + Rational(weight) * egf_triangle_entry(a, k + r, r);
  }
  return acc;
}

}  // namespace fps
