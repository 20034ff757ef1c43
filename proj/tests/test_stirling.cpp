#include <doctest.h>

#include "fps/stirling.hpp"

using namespace fps;

namespace {
Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }
}  // namespace

TEST_CASE("recurrence oracle values") {
  CHECK(stirling_recurrence(StirlingKind::second, 4, 2) == 7);
  CHECK(stirling_recurrence(StirlingKind::first_unsigned, 4, 2) == 11);
  CHECK(stirling_recurrence(StirlingKind::second, 5, 2) == 15);
  CHECK(stirling_recurrence(StirlingKind::first_unsigned, 5, 2) == 50);
  CHECK(stirling_recurrence(StirlingKind::second, 6, 6) == 1);
  CHECK(stirling_recurrence(StirlingKind::first_unsigned, 3, 3) == 1);
  CHECK(stirling_recurrence(StirlingKind::second, 0, 0) == 1);
  CHECK(stirling_recurrence(StirlingKind::second, 5, 0) == 0);
  CHECK_THROWS_AS(stirling_recurrence(StirlingKind::second, 2, 3), UsageError);
  CHECK_THROWS_AS(stirling_recurrence(StirlingKind::second, -1, 0), UsageError);
}

TEST_CASE("table shape invariants") {
  for (StirlingKind kind : {StirlingKind::second, StirlingKind::first_unsigned}) {
    const StirlingTable table(kind, 10);
    for (int n = 1; n <= 10; ++n) {
      CHECK(table.at(n, n) == 1);
      CHECK(table.at(n, 0) == 0);
      for (int k = 0; k <= n; ++k) CHECK(table.at(n, k) >= 0);
    }
    CHECK_THROWS_AS(table.at(11, 1), UsageError);
  }
}

TEST_CASE("generating-function route") {
  CHECK(stirling_via_gf(StirlingKind::second, 5, 2) == 15);
  CHECK(stirling_via_gf(StirlingKind::first_unsigned, 3, 1) == 2);
  CHECK(stirling_via_gf(StirlingKind::second, 7, 7) == 1);
  CHECK(stirling_via_gf(StirlingKind::first_unsigned, 6, 6) == 1);
  CHECK_THROWS_AS(stirling_via_gf(StirlingKind::second, 3, 0), UsageError);
  CHECK_THROWS_AS(stirling_via_gf(StirlingKind::second, 3, 4), UsageError);
}

TEST_CASE("partition-sum route computes the shifted value") {
  // Single-part case collapses to a binomial.
  CHECK(stirling_partition_formula(StirlingKind::second, 1, 4) == 10);
  CHECK(stirling_partition_formula(StirlingKind::second, 1, 4) ==
        stirling_recurrence(StirlingKind::second, 5, 4));
  CHECK(stirling_partition_formula(StirlingKind::second, 3, 2) == 15);
  CHECK(stirling_partition_formula(StirlingKind::first_unsigned, 2, 2) == 11);
  // n = 0 is the empty sum and gives the diagonal value 1.
  CHECK(stirling_partition_formula(StirlingKind::second, 0, 5) == 1);
  CHECK_THROWS_AS(stirling_partition_formula(StirlingKind::second, 1, 0), UsageError);
}

TEST_CASE("shift identity route") {
  // binom(-1,1) binom(5,3) S(3,1) + binom(-1,0) binom(5,4) S(4,2) = -10 + 35.
  CHECK(stirling_shift(StirlingKind::second, 3, 2) == 25);
  CHECK(stirling_shift(StirlingKind::second, 3, 2) ==
        stirling_recurrence(StirlingKind::second, 5, 3));
  CHECK(stirling_shift(StirlingKind::first_unsigned, 1, 1) == 1);
  CHECK(stirling_shift(StirlingKind::second, 2, 3) == 15);
  CHECK_THROWS_AS(stirling_shift(StirlingKind::second, 0, 1), UsageError);
  CHECK_THROWS_AS(stirling_shift(StirlingKind::second, 1, 0), UsageError);
}

TEST_CASE("four routes agree up to n = 12") {
  for (StirlingKind kind : {StirlingKind::second, StirlingKind::first_unsigned}) {
    for (int n = 1; n <= 12; ++n) {
      for (int m = 1; m <= n; ++m) {
        const Int expected = stirling_recurrence(kind, n, m);
        CHECK(stirling_via_gf(kind, n, m) == expected);
        CHECK(stirling_partition_formula(kind, n - m, m) == expected);
        if (m < n) CHECK(stirling_shift(kind, m, n - m) == expected);
      }
    }
  }
}

TEST_CASE("three-rows-down closed forms") {
  for (int m = 1; m <= 30; ++m) {
    CHECK(stirling_recurrence(StirlingKind::second, m + 3, m) ==
          binomial(Int(m + 1), 2) * binomial(Int(m + 3), 4));
    CHECK(stirling_recurrence(StirlingKind::first_unsigned, m + 3, m) ==
          binomial(Int(m + 3), 2) * binomial(Int(m + 3), 4));
  }
}

TEST_CASE("alternating surjection sum") {
  CHECK(surjection_sum(2, 1) == 6);
  CHECK(surjection_sum(3, 1) == 36);
  for (int n = 1; n <= 6; ++n) CHECK(surjection_sum(1, n) == 1);
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      CHECK(surjection_sum(m, n) ==
            factorial(static_cast<unsigned long>(m)) *
                stirling_recurrence(StirlingKind::second, n + m, m));
  CHECK_THROWS_AS(surjection_sum(0, 1), UsageError);
}

TEST_CASE("egf triangle entries") {
  // x/(1-x) produces the Lah triangle: a(n,m) = (n!/m!) binom(n-1, m-1).
  const Series lah_base = named_series("geom", 8);
  CHECK(egf_triangle_entry(lah_base, 3, 2) == Rational(6));
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m) {
      const Rational expected =
          Rational(factorial(static_cast<unsigned long>(n)),
                   factorial(static_cast<unsigned long>(m))) *
          Rational(binomial(Int(n - 1), static_cast<unsigned long>(m - 1)));
      CHECK(egf_triangle_entry(lah_base, n, m) == expected);
    }

  // Identity base: 1 on the diagonal, 0 elsewhere.
  const Series id = named_series("identity", 6);
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(egf_triangle_entry(id, n, m) == (n == m ? Rational(1) : Rational(0)));

  CHECK_THROWS_AS(egf_triangle_entry(named_series("geom", 3), 5, 1), UsageError);
  CHECK_THROWS_AS(egf_triangle_entry(Series(std::vector<Rational>{Rational(1), Rational(1)}), 1, 1),
                  DomainError);
}

TEST_CASE("egf triangles specialize to both Stirling triangles") {
  const EgfTriangle second(named_series("exp_minus_1", 10), 10);
  const EgfTriangle first(named_series("log1p", 10), 10);
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= n; ++m) {
      CHECK(second.at(n, m) == Rational(stirling_recurrence(StirlingKind::second, n, m)));
      Rational expected(stirling_recurrence(StirlingKind::first_unsigned, n, m));
      if ((n - m) % 2 != 0) expected = -expected;
      CHECK(first.at(n, m) == expected);
    }
  }
  CHECK(second.at(3, 5) == Rational(0));  // above the diagonal
  CHECK_THROWS_AS(second.at(11, 1), UsageError);
  CHECK_THROWS_AS(EgfTriangle(named_series("geom", 3), 5), UsageError);
  CHECK_THROWS_AS(EgfTriangle(Series(std::vector<Rational>{Rational(0), Rational(2)}), 1),
                  DomainError);
}

TEST_CASE("egf shift identity for the Lah triangle") {
  const Series lah_base = named_series("geom", 24);
  CHECK(egf_triangle_shift(lah_base, 2, 1) == Rational(6));  // a(3,2)
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= 12; ++k)
      CHECK(egf_triangle_shift(lah_base, n, k) == egf_shift_rhs(lah_base, n, k));
  CHECK_THROWS_AS(egf_triangle_shift(named_series("geom", 4), 3, 2), UsageError);
}

TEST_CASE("partition route keeps exact integrality on a wide sweep") {
  // The first-kind denominators pile up factorials; a wrong implementation
  // almost always leaves a fraction behind, which would throw.
  for (int n = 0; n <= 10; ++n)
    for (int m = 1; m <= 6; ++m) {
      CHECK(stirling_partition_formula(StirlingKind::second, n, m) >= 0);
      CHECK(stirling_partition_formula(StirlingKind::first_unsigned, n, m) >= 0);
    }
}

TEST_CASE("rational helper sanity for the shift weights") {
  CHECK(rat(-1, 1) == Rational(binomial(Int(-1), 1)));
  CHECK(Rational(binomial(Int(-1), 0)) == Rational(1));
}
