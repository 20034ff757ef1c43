#include <doctest.h>

#include <random>

#include "fps/inversion.hpp"

using namespace fps;

namespace {

Rational rat(long num, long den) { return Rational(Int(num), Int(den)); }

Series make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Series(std::move(v));
}

struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}
  long pick(long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational() { return Rational(Int(pick(-9, 9)), Int(pick(1, 9))); }
  std::vector<Rational> rationals(int count) {
    std::vector<Rational> out(static_cast<size_t>(count));
    for (auto& r : out) r = rational();
    return out;
  }
};

Series exp_series(int order) { return named_series("exp_minus_1", order) + Rational(1); }

RationalSequence seq1(std::vector<Rational> values) { return {1, std::move(values)}; }

}  // namespace

TEST_CASE("kernel entries for (1+x)") {
  const TransformKernel fwd =
      build_kernel(named_series("binomial_t", 4, Rational(1)), 5, KernelDirection::forward);
  // K[n][m] = binom(m, n-m).
  CHECK(fwd.at(2, 1) == Rational(1));
  CHECK(fwd.at(3, 1) == Rational(0));
  CHECK(fwd.at(4, 2) == Rational(1));
  CHECK(fwd.at(3, 2) == Rational(2));
  for (int n = 1; n <= 5; ++n) CHECK(fwd.at(n, n) == Rational(1));
  const TransformKernel inv =
      build_kernel(named_series("binomial_t", 4, Rational(1)), 5, KernelDirection::inverse);
  // K[n][m] = binom(-n, n-m).
  CHECK(inv.at(2, 1) == Rational(-2));
  CHECK(inv.at(3, 1) == Rational(6));  // binom(-3, 2)
}

TEST_CASE("kernel entries for the exponential") {
  const Series e = exp_series(5);
  const TransformKernel fwd = build_kernel(e, 5, KernelDirection::forward);
  const TransformKernel inv = build_kernel(e, 5, KernelDirection::inverse);
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      const auto d = static_cast<unsigned long>(n - m);
      CHECK(fwd.at(n, m) == Rational(int_pow(Int(m), d), factorial(d)));
      CHECK(inv.at(n, m) == Rational(int_pow(Int(-n), d), factorial(d)));
    }
  }
}

TEST_CASE("diagonal entries are powers of the constant term") {
  const TransformKernel fwd = build_kernel(make({2, 1, 0, 0}), 4, KernelDirection::forward);
  for (int n = 1; n <= 4; ++n) CHECK(fwd.at(n, n) == Rational(2).pow_int(n));
  const TransformKernel inv = build_kernel(make({2, 1, 0, 0}), 4, KernelDirection::inverse);
  for (int n = 1; n <= 4; ++n) CHECK(inv.at(n, n) == Rational(2).pow_int(-n));
}

TEST_CASE("kernel construction errors") {
  CHECK_THROWS_AS(build_kernel(make({0, 1, 0}), 3, KernelDirection::forward), DomainError);
  CHECK_THROWS_AS(build_kernel(make({1, 1}), 5, KernelDirection::forward), UsageError);
  CHECK_THROWS_AS(build_kernel(make({1, 1}), 0, KernelDirection::forward), UsageError);
}

TEST_CASE("transform with the trivial kernel scales by the index") {
  const TransformKernel fwd =
      build_kernel(named_series("binomial_t", 2, Rational(0)), 3, KernelDirection::forward);
  const auto a = transform_apply(fwd, seq1({Rational(1), Rational(2), Rational(3)}));
  CHECK(a.values == std::vector<Rational>{Rational(1), Rational(4), Rational(9)});
  const TransformKernel inv =
      build_kernel(named_series("binomial_t", 2, Rational(0)), 3, KernelDirection::inverse);
  CHECK(transform_apply(inv, a).values ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
}

TEST_CASE("unit impulse under the (1+x) kernel") {
  const TransformKernel fwd =
      build_kernel(named_series("binomial_t", 3, Rational(1)), 4, KernelDirection::forward);
  const auto a = transform_apply(fwd, seq1({Rational(1), Rational(0), Rational(0), Rational(0)}));
  // a_n = n binom(1, n-1).
  CHECK(a.values == std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
}

TEST_CASE("rescaled exponential pair evaluated directly") {
  // With weights binom(n,m) m^{n-m} on b = (1,1): a = (1,3); the matching
  // inverse weights binom(n-1,m-1) (-n)^{n-m} recover b_2 = 1.
  const Rational a1 = Rational(binomial(Int(1), 1)) * Rational(int_pow(Int(1), 0)) * Rational(1);
  const Rational a2 = Rational(binomial(Int(2), 1)) * Rational(int_pow(Int(1), 1)) * Rational(1) +
                      Rational(binomial(Int(2), 2)) * Rational(int_pow(Int(2), 0)) * Rational(1);
  CHECK(a1 == Rational(1));
  CHECK(a2 == Rational(3));
  const Rational b2 = Rational(binomial(Int(1), 0)) * Rational(int_pow(Int(-2), 1)) * a1 +
                      Rational(binomial(Int(1), 1)) * Rational(int_pow(Int(-2), 0)) * a2;
  CHECK(b2 == Rational(1));
}

TEST_CASE("transform offset contract") {
  const TransformKernel fwd =
      build_kernel(named_series("binomial_t", 2, Rational(1)), 3, KernelDirection::forward);
  CHECK_THROWS_AS(transform_apply(fwd, RationalSequence{0, {Rational(1)}}), UsageError);
  // Shorter input gives a shorter output.
  CHECK(transform_apply(fwd, seq1({Rational(5)})).values == std::vector<Rational>{Rational(5)});
}

TEST_CASE("round trips over the kernel test set") {
  Gen gen(99);
  std::vector<Series> bases = {exp_series(11), make({1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                               make({2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})};
  for (const Rational& t : {Rational(1), Rational(2), rat(1, 2), rat(-1, 3)})
    bases.push_back(named_series("binomial_t", 11, t));
  for (const auto& f : bases) {
    const TransformKernel fwd = build_kernel(f, 12, KernelDirection::forward);
    const TransformKernel inv = build_kernel(f, 12, KernelDirection::inverse);
    for (int round = 0; round < 3; ++round) {
      const RationalSequence b = seq1(gen.rationals(12));
      CHECK(transform_apply(inv, transform_apply(fwd, b)) == b);
      CHECK(transform_apply(fwd, transform_apply(inv, b)) == b);
    }
  }
}

TEST_CASE("sectioned binomial involution") {
  const RationalSequence s{0, {Rational(0), Rational(0), Rational(1)}};
  const RationalSequence once = binomial_involution(1, s);
  CHECK(once.values == std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
  CHECK(binomial_involution(1, once) == s);

  const RationalSequence s2{0, {Rational(0), Rational(0), Rational(1)}};
  const RationalSequence once2 = binomial_involution(2, s2);
  CHECK(once2.values == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  CHECK(binomial_involution(2, once2) == s2);

  const RationalSequence zero{0, std::vector<Rational>(5, Rational(0))};
  CHECK(binomial_involution(3, zero) == zero);
}

TEST_CASE("involution rejects unsupported input") {
  CHECK_THROWS_AS(binomial_involution(2, RationalSequence{0, {Rational(0), Rational(1)}}),
                  DomainError);
  CHECK_THROWS_AS(binomial_involution(1, RationalSequence{1, {Rational(1)}}), UsageError);
  CHECK_THROWS_AS(binomial_involution(0, RationalSequence{0, {Rational(1)}}), UsageError);
}

TEST_CASE("involution squares to the identity on its domain") {
  Gen gen(31337);
  for (int k = 1; k <= 3; ++k) {
    for (int round = 0; round < 3; ++round) {
      std::vector<Rational> values(30, Rational(0));
      for (int i = 0; i < 30; i += k) values[static_cast<size_t>(i)] = gen.rational();
      const RationalSequence s{0, std::move(values)};
      CHECK(binomial_involution(k, binomial_involution(k, s)) == s);
    }
  }
}

TEST_CASE("orthogonality sums vanish strictly below the diagonal") {
  CHECK(orthogonality_sums(named_series("binomial_t", 2, Rational(1)), 1, 2) ==
        std::make_pair(Rational(0), Rational(0)));
  CHECK(orthogonality_sums(exp_series(2), 1, 2) == std::make_pair(Rational(0), Rational(0)));
  for (int n = 1; n <= 6; ++n)
    CHECK(orthogonality_sums(exp_series(6), n, n) ==
          std::make_pair(Rational(Int(1), Int(n)), Rational(n)));
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(orthogonality_sums(make({2, 1, 0, 0, 0, 0, 0, 0, 0}), k, n) ==
            std::make_pair(Rational(0), Rational(0)));
  CHECK_THROWS_AS(orthogonality_sums(exp_series(3), 2, 5), UsageError);
  CHECK_THROWS_AS(orthogonality_sums(make({0, 1, 0}), 1, 2), DomainError);
}

TEST_CASE("inverse power coefficients from the partition sum") {
  CHECK(inverse_power_coefficient(named_series("geom", 3), 1, 1) == Rational(-1));
  CHECK(inverse_power_coefficient(named_series("catalan_beta", 4), 1, 2) == Rational(5));
  CHECK(inverse_power_coefficient(named_series("sin", 6), 1, 4) == rat(3, 40));
  CHECK_THROWS_AS(inverse_power_coefficient(make({1, 1, 0}), 1, 1), DomainError);
  CHECK_THROWS_AS(inverse_power_coefficient(make({0, 0, 1}), 1, 1), DomainError);
  CHECK_THROWS_AS(inverse_power_coefficient(named_series("geom", 2), 1, 2), UsageError);
}

TEST_CASE("partition sum agrees with the residue formula") {
  for (const char* name : {"geom", "catalan_beta", "sin", "exp_minus_1", "log1p"}) {
    const Series beta = named_series(name, 9);
    for (int m = 1; m <= 7; ++m)
      for (int n = 1; m + n <= 8; ++n)
        CHECK(inverse_power_coefficient(beta, m, n) ==
              series_reverse_lagrange(beta.truncated(8), m + n, m));
  }
}

TEST_CASE("inverse pair transform on known pairs") {
  // -x/(1+x) is self-inverse, so its coefficient list maps to itself.
  const std::vector<Rational> self = {Rational(1), Rational(-1), Rational(1), Rational(-1),
                                      Rational(1)};
  CHECK(inverse_pair_transform(self, 5) == self);

  const std::vector<Rational> zero(4, Rational(0));
  CHECK(inverse_pair_transform(zero, 4) == zero);

  // Oracle: reverse -x + x^2 coefficient-wise and re-express. The inverse
  // is -x + x^2 - 2x^3 + 5x^4 - 14x^5 + ... (signed Catalan numbers).
  const std::vector<Rational> alpha = {Rational(1), Rational(0), Rational(0), Rational(0)};
  const std::vector<Rational> beta = inverse_pair_transform(alpha, 4);
  CHECK(beta == std::vector<Rational>{Rational(1), Rational(-2), Rational(5), Rational(-14)});

  CHECK_THROWS_AS(inverse_pair_transform(self, 3), UsageError);
}

TEST_CASE("inverse pair transform matches full reversion both ways") {
  Gen gen(2718);
  for (int round = 0; round < 4; ++round) {
    const std::vector<Rational> alpha = gen.rationals(8);
    const std::vector<Rational> beta = inverse_pair_transform(alpha, 8);
    // Out of the list indexing into a series and back.
    std::vector<Rational> series_coeffs(10, Rational(0));
    series_coeffs[1] = Rational(-1);
    for (int j = 1; j <= 8; ++j)
      series_coeffs[static_cast<size_t>(j + 1)] = alpha[static_cast<size_t>(j - 1)];
    const Series rev = series_reverse_full(Series(series_coeffs));
    CHECK(rev[1] == Rational(-1));
    for (int j = 1; j <= 8; ++j)
      CHECK(rev[j + 1] == beta[static_cast<size_t>(j - 1)]);
    // Involution: applying the transform twice returns the input.
    CHECK(inverse_pair_transform(beta, 8) == alpha);
  }
}

TEST_CASE("self-inverse completion closed forms") {
  for (const Rational& a : {Rational(1), Rational(-2), rat(3, 5)}) {
    const SelfInverseSeries s = self_inverse_complete({a, Rational(0)}, 4);
    CHECK(s.coeffs[1] == -(a * a));
    CHECK(s.coeffs[3] == Rational(2) * a.pow_int(4));
  }
  // a1 = a3 = 1 reproduces -x/(1+x).
  const SelfInverseSeries s = self_inverse_complete({Rational(1), Rational(1)}, 4);
  CHECK(s.coeffs ==
        std::vector<Rational>{Rational(1), Rational(-1), Rational(1), Rational(-1)});

  const SelfInverseSeries trivial = self_inverse_complete({}, 6);
  CHECK(trivial.coeffs == std::vector<Rational>(6, Rational(0)));
  CHECK(trivial.to_series() == make({0, -1, 0, 0, 0, 0, 0, 0}));

  CHECK_THROWS_AS(self_inverse_complete({Rational(1), Rational(1), Rational(1)}, 4), UsageError);
}

TEST_CASE("completed series compose to the identity") {
  Gen gen(1618);
  for (int order : {4, 7, 10}) {
    for (int round = 0; round < 3; ++round) {
      const std::vector<Rational> odd = gen.rationals((order + 1) / 2);
      const SelfInverseSeries s = self_inverse_complete(odd, order);
      const Series alpha = s.to_series();
      CHECK(series_compose(alpha, alpha) == named_series("identity", order + 1));
      for (int n = 1; n <= order; n += 2)
        CHECK(self_inverse_partial_sum(s.coeffs, n) == Rational(0));
      const auto even = self_inverse_low_even_coeffs(
          s.coeffs[0], order >= 3 ? s.coeffs[2] : Rational(0),
          order >= 5 ? s.coeffs[4] : Rational(0), order >= 7 ? s.coeffs[6] : Rational(0));
      if (order >= 2) CHECK(s.coeffs[1] == even[0]);
      if (order >= 4) CHECK(s.coeffs[3] == even[1]);
      if (order >= 6) CHECK(s.coeffs[5] == even[2]);
      if (order >= 8) CHECK(s.coeffs[7] == even[3]);
    }
  }
}
