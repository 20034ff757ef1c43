#pragma once

#include <vector>

#include "fps/rational.hpp"
#include "fps/series.hpp"

namespace fps {

enum class StirlingKind { first_unsigned, second };

/// Triangle of Stirling numbers built from the defining recurrences:
///   S(n,k) = S(n-1,k-1) + k S(n-1,k)
///   s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)
/// This route is the oracle the other routes are tested against. Immutable
/// once constructed.
class StirlingTable {
public:
  StirlingTable(StirlingKind kind, int max_n);

  StirlingKind kind() const { return kind_; }
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  const Int& at(int n, int k) const;

private:
  StirlingKind kind_;
  std::vector<std::vector<Int>> rows_;
};

/// Memoized lookup backed by a process-wide table per kind (grown under a
/// lock; safe for concurrent readers).
Int stirling_recurrence(StirlingKind kind, int n, int k);

/// n! [x^n] (base^m / m!) with base e^x - 1 (second kind) or log(1+x)
/// (first kind, sign stripped). A non-integral or negative result raises
/// ConsistencyError rather than rounding.
Int stirling_via_gf(StirlingKind kind, int n, int m);

/// Value at (n+m, m) via the partition sum over multiplicity vectors of n;
/// n = 0 is the empty-sum case and gives 1. All intermediates are exact
/// rationals; the result is asserted integral.
Int stirling_partition_formula(StirlingKind kind, int n, int m);

/// Value at (n+k, n) from the entries {(k+r, r) : 1 <= r <= k} supplied by
/// the recurrence oracle, combined with generalized binomials.
Int stirling_shift(StirlingKind kind, int n, int k);

/// sum_{r=0}^m binom(m,r) (-1)^{m-r} r^{m+n}; equals m! times the
/// second-kind value at (n+m, m).
Int surjection_sum(int m, int n);

/// Triangle a(n, m) defined by a(x)^m / m! = sum_n a(n,m) x^n / n! for a
/// base series a = x + a_2 x^2 + ...; at(n, m) is 0 for n < m.
class EgfTriangle {
public:
  EgfTriangle(Series base, int max_n);

  const Series& base() const { return base_; }
  int max_n() const { return max_n_; }
  Rational at(int n, int m) const;

private:
  Series base_;
  int max_n_;
  std::vector<std::vector<Rational>> rows_;
};

/// a(n, m) = (n!/m!) [x^n] a(x)^m computed directly.
Rational egf_triangle_entry(const Series& a, int n, int m);

/// a(n+k, n) computed directly from a(x)^n; requires a.order() >= n+k.
/// The binomial shift identity lives in egf_shift_rhs and in tests.
Rational egf_triangle_shift(const Series& a, int n, int k);

/// The shift identity's right-hand side:
/// sum_{r=1}^k binom(k-n, k-r) binom(k+n, k+r) a(k+r, r).
Rational egf_shift_rhs(const Series& a, int n, int k);

}  // namespace fps
