#include "fps/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "fps/inversion.hpp"
#include "fps/partitions.hpp"
#include "fps/stirling.hpp"

namespace fps {

namespace {

using Params = std::map<std::string, std::string>;

// Deterministic across platforms: mt19937_64 is fully specified and we
// reduce by modulo instead of going through std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Numerators in [-9, 9], denominators in [1, 9].
  Rational rational() { return Rational(Int(int_in(-9, 9)), Int(int_in(1, 9))); }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  std::vector<Rational> rationals(int count) {
    std::vector<Rational> out(static_cast<size_t>(count));
    for (auto& r : out) r = rational();
    return out;
  }

  Series series(int order) { return Series(rationals(order + 1)); }

  Series unit_series(int order) {
    auto c = rationals(order + 1);
    c[0] = Rational(1);
    return Series(std::move(c));
  }

private:
  std::mt19937_64 eng_;
};

std::uint64_t family_seed(std::uint64_t base, std::string_view family) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : family) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h ^ base;
}

std::string render(const std::vector<Rational>& values) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].str();
  }
  os << ")";
  return os.str();
}

std::string render(const std::pair<Rational, Rational>& p) {
  return "(" + p.first.str() + ", " + p.second.str() + ")";
}

std::string str(long v) { return std::to_string(v); }

Series exp_series(int order) { return named_series("exp_minus_1", order) + Rational(1); }

struct NamedBase {
  std::string label;
  Series series;
};

// Kernel test set with general constant terms; only integer powers are
// ever taken of these.
std::vector<NamedBase> general_kernel_bases(int order) {
  std::vector<Rational> quad(static_cast<size_t>(order) + 1, Rational(0));
  quad[0] = Rational(1);
  if (order >= 1) quad[1] = Rational(1);
  if (order >= 2) quad[2] = Rational(1);
  std::vector<Rational> affine(static_cast<size_t>(order) + 1, Rational(0));
  affine[0] = Rational(2);
  if (order >= 1) affine[1] = Rational(1);
  std::vector<NamedBase> out;
  out.push_back({"exp", exp_series(order)});
  out.push_back({"1+x+x^2", Series(std::move(quad))});
  out.push_back({"2+x", Series(std::move(affine))});
  return out;
}

const std::vector<Rational>& binomial_kernel_ts() {
  static const std::vector<Rational> ts = {Rational(1), Rational(2),
                                           Rational(Int(1), Int(2)),
                                           Rational(Int(-1), Int(3))};
  return ts;
}

std::vector<NamedBase> reversible_bases(int order) {
  std::vector<NamedBase> out;
  out.push_back({"geom", named_series("geom", order)});
  out.push_back({"exp_minus_1", named_series("exp_minus_1", order)});
  out.push_back({"sin", named_series("sin", order)});
  out.push_back({"catalan_beta", named_series("catalan_beta", order)});
  out.push_back({"identity", named_series("identity", order)});
  return out;
}

using Sink = std::vector<CheckResult>;

void check_series_ring(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (int c = 0; c < 3; ++c) {
    const Series f = rng.series(max_n);
    const Series g = rng.series(max_n);
    const Series h = rng.series(max_n);
    const Params base{{"case", str(c)}};
    auto with_law = [&](const char* law) {
      Params p = base;
      p["law"] = law;
      return p;
    };
    out.push_back(make_check("series-ring", with_law("add-assoc"), ((f + g) + h).str(),
                             (f + (g + h)).str()));
    out.push_back(make_check("series-ring", with_law("mul-comm"), (f * g).str(), (g * f).str()));
    out.push_back(make_check("series-ring", with_law("mul-assoc"), ((f * g) * h).str(),
                             (f * (g * h)).str()));
    out.push_back(make_check("series-ring", with_law("distrib"), (f * (g + h)).str(),
                             (f * g + f * h).str()));
  }
}

void check_series_pow(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (int c = 0; c < 3; ++c) {
    const Series f = rng.unit_series(max_n);
    const Rational a = rng.rational();
    const Rational b = rng.rational();
    out.push_back(make_check(
        "series-pow",
        Params{{"case", str(c)}, {"law", "exponent-add"}, {"a", a.str()}, {"b", b.str()}},
        (series_pow(f, a) * series_pow(f, b)).str(), series_pow(f, a + b).str()));
    out.push_back(make_check("series-pow", Params{{"case", str(c)}, {"law", "sqrt-square"}},
                             series_pow(series_pow(f, Rational(Int(1), Int(2))), 2).str(),
                             f.str()));
    auto coeffs = rng.rationals(max_n + 1);
    coeffs[0] = rng.nonzero_rational();
    const Series g{std::move(coeffs)};
    out.push_back(make_check("series-pow",
                             Params{{"case", str(c)}, {"law", "integer-exponents"}},
                             (series_pow(g, 2) * series_pow(g, -3)).str(),
                             series_pow(g, -1).str()));
  }
}

void check_pow_poly_eval(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (int c = 0; c < 2; ++c) {
    const Series f = rng.unit_series(max_n);
    const int m = max_n;
    const PolyT poly = coeff_pow_poly_t(f, m);
    for (int r = 0; r <= m; ++r) {
      const Rational direct = series_pow(f.truncated(m), static_cast<long>(r))[m];
      out.push_back(make_check("lemma2.1", Params{{"case", str(c)}, {"m", str(m)}, {"r", str(r)}},
                               poly.evaluate(Rational(r)), direct));
    }
  }
}

void check_reversion(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  auto bases = reversible_bases(max_n);
  {
    auto coeffs = rng.rationals(max_n + 1);
    coeffs[0] = Rational(0);
    coeffs[1] = rng.nonzero_rational();
    bases.push_back({"random", Series(std::move(coeffs))});
  }
  const Series identity = named_series("identity", max_n);
  for (const auto& [label, alpha] : bases) {
    const Series rev = series_reverse_full(alpha);
    out.push_back(make_check("reverse-roundtrip", Params{{"alpha", label}},
                             series_compose(alpha, rev).str(), identity.str()));
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        const Rational via_lagrange = series_reverse_lagrange(alpha, n, k);
        const Rational via_reversion = series_pow(rev, static_cast<long>(k))[n];
        out.push_back(make_check("lemma3.2",
                                 Params{{"alpha", label}, {"n", str(n)}, {"k", str(k)}},
                                 via_lagrange, via_reversion));
      }
    }
  }
}

void check_partition_count(Sink& out, int max_n, std::uint64_t) {
  for (int n = 0; n <= max_n; ++n) {
    const auto vectors = enumerate_multiplicity_vectors(n);
    bool well_formed = true;
    std::set<std::vector<long>> distinct;
    for (const auto& mv : vectors) {
      long total = 0;
      for (int i = 1; i <= n; ++i) total += static_cast<long>(i) * mv.k[static_cast<size_t>(i - 1)];
      if (total != n || static_cast<int>(mv.k.size()) != n) well_formed = false;
      distinct.insert(mv.k);
    }
    const bool no_dupes = distinct.size() == vectors.size();
    const std::string lhs = std::to_string(vectors.size()) + (well_formed ? "" : " malformed") +
                            (no_dupes ? "" : " duplicated");
    out.push_back(make_check("partition-count", Params{{"n", str(n)}}, lhs,
                             partition_count(n).get_str()));
  }
}

void check_stirling_gf(Sink& out, int max_n, std::uint64_t) {
  for (StirlingKind kind : {StirlingKind::second, StirlingKind::first_unsigned}) {
    const std::string kind_label = kind == StirlingKind::second ? "2" : "1";
    for (int n = 1; n <= max_n; ++n)
      for (int m = 1; m <= n; ++m)
        out.push_back(make_check(
            "stirling-gf", Params{{"kind", kind_label}, {"n", str(n)}, {"m", str(m)}},
            stirling_via_gf(kind, n, m).get_str(), stirling_recurrence(kind, n, m).get_str()));
  }
  // The same generating functions through the EGF triangle.
  const EgfTriangle second(named_series("exp_minus_1", max_n), max_n);
  const EgfTriangle first(named_series("log1p", max_n), max_n);
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      out.push_back(make_check(
          "stirling-gf", Params{{"kind", "2"}, {"route", "egf"}, {"n", str(n)}, {"m", str(m)}},
          second.at(n, m), Rational(stirling_recurrence(StirlingKind::second, n, m))));
      Rational signed_first(stirling_recurrence(StirlingKind::first_unsigned, n, m));
      if ((n - m) % 2 != 0) signed_first = -signed_first;
      out.push_back(make_check(
          "stirling-gf", Params{{"kind", "1"}, {"route", "egf"}, {"n", str(n)}, {"m", str(m)}},
          first.at(n, m), signed_first));
    }
  }
}

void check_stirling_partition(Sink& out, int max_n, std::uint64_t) {
  for (StirlingKind kind : {StirlingKind::second, StirlingKind::first_unsigned}) {
    const std::string kind_label = kind == StirlingKind::second ? "2" : "1";
    for (int n = 1; n <= max_n; ++n)
      for (int m = 1; m <= n; ++m)
        out.push_back(make_check(
            "thm4.2", Params{{"kind", kind_label}, {"n", str(n)}, {"m", str(m)}},
            stirling_partition_formula(kind, n - m, m).get_str(),
            stirling_recurrence(kind, n, m).get_str()));
  }
}

void check_stirling_shift(Sink& out, int max_n, std::uint64_t) {
  for (StirlingKind kind : {StirlingKind::second, StirlingKind::first_unsigned}) {
    const std::string kind_label = kind == StirlingKind::second ? "2" : "1";
    for (int n = 2; n <= max_n; ++n)
      for (int m = 1; m < n; ++m)
        out.push_back(make_check(
            "thm2.3", Params{{"kind", kind_label}, {"n", str(n)}, {"m", str(m)}},
            stirling_shift(kind, m, n - m).get_str(),
            stirling_recurrence(kind, n, m).get_str()));
  }
}

void check_closed_forms(Sink& out, int max_n, std::uint64_t) {
  for (int m = 1; m <= max_n; ++m) {
    const Int second_rhs = binomial(Int(m + 1), 2) * binomial(Int(m + 3), 4);
    const Int first_rhs = binomial(Int(m + 3), 2) * binomial(Int(m + 3), 4);
    out.push_back(make_check("eq4.1", Params{{"kind", "2"}, {"m", str(m)}},
                             stirling_recurrence(StirlingKind::second, m + 3, m).get_str(),
                             second_rhs.get_str()));
    out.push_back(make_check("eq4.1", Params{{"kind", "1"}, {"m", str(m)}},
                             stirling_recurrence(StirlingKind::first_unsigned, m + 3, m).get_str(),
                             first_rhs.get_str()));
  }
}

void check_egf_shift(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NamedBase> bases;
  bases.push_back({"lah", named_series("geom", 2 * max_n)});
  {
    auto coeffs = rng.rationals(2 * max_n + 1);
    coeffs[0] = Rational(0);
    coeffs[1] = Rational(1);
    bases.push_back({"random", Series(std::move(coeffs))});
  }
  for (const auto& [label, base] : bases)
    for (int n = 1; n <= max_n; ++n)
      for (int k = 1; k <= max_n; ++k)
        out.push_back(make_check("thm2.2",
                                 Params{{"base", label}, {"n", str(n)}, {"k", str(k)}},
                                 egf_triangle_shift(base, n, k), egf_shift_rhs(base, n, k)));
}

void roundtrip_checks(Sink& out, const char* id, const std::string& label, const Series& f,
                      int size, Rng& rng) {
  const TransformKernel forward = build_kernel(f, size, KernelDirection::forward);
  const TransformKernel inverse = build_kernel(f, size, KernelDirection::inverse);
  for (int c = 0; c < 2; ++c) {
    const RationalSequence seq{1, rng.rationals(size)};
    const RationalSequence fwd_inv = transform_apply(inverse, transform_apply(forward, seq));
    out.push_back(make_check(id, Params{{"f", label}, {"case", str(c)}, {"way", "inv-of-fwd"}},
                             render(fwd_inv.values), render(seq.values)));
    const RationalSequence inv_fwd = transform_apply(forward, transform_apply(inverse, seq));
    out.push_back(make_check(id, Params{{"f", label}, {"case", str(c)}, {"way", "fwd-of-inv"}},
                             render(inv_fwd.values), render(seq.values)));
  }
}

void check_transform_roundtrip(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (const auto& [label, f] : general_kernel_bases(max_n))
    roundtrip_checks(out, "thm3.2-roundtrip", label, f, max_n, rng);
  for (const auto& t : binomial_kernel_ts())
    roundtrip_checks(out, "thm3.3-roundtrip", "(1+x)^" + t.str(),
                     named_series("binomial_t", max_n, t), max_n, rng);
}

void check_involution(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  const int len = std::max(max_n, 4);
  for (int k = 1; k <= 3; ++k) {
    for (int c = 0; c < 2; ++c) {
      std::vector<Rational> values(static_cast<size_t>(len), Rational(0));
      for (int i = 0; i < len; i += k) values[static_cast<size_t>(i)] = rng.rational();
      const RationalSequence seq{0, std::move(values)};
      const RationalSequence twice = binomial_involution(k, binomial_involution(k, seq));
      out.push_back(make_check("thm3.1", Params{{"k", str(k)}, {"case", str(c)}},
                               render(twice.values), render(seq.values)));
    }
  }
}

void orthogonality_checks(Sink& out, const char* id, const std::string& label, const Series& f,
                          int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k)
      out.push_back(make_check(id, Params{{"f", label}, {"k", str(k)}, {"n", str(n)}},
                               render(orthogonality_sums(f, k, n)),
                               render(std::make_pair(Rational(0), Rational(0)))));
    out.push_back(make_check(
        id, Params{{"f", label}, {"k", str(n)}, {"n", str(n)}},
        render(orthogonality_sums(f, n, n)),
        render(std::make_pair(Rational(Int(1), Int(n)), Rational(n)))));
  }
}

void check_orthogonality(Sink& out, int max_n, std::uint64_t) {
  for (const auto& [label, f] : general_kernel_bases(max_n))
    orthogonality_checks(out, "thm3.4", label, f, max_n);
  for (const auto& t : binomial_kernel_ts())
    orthogonality_checks(out, "cor3.1", "(1+x)^" + t.str(),
                         named_series("binomial_t", max_n, t), max_n);
}

void check_inverse_power(Sink& out, int max_n, std::uint64_t) {
  std::vector<NamedBase> bases = reversible_bases(max_n + 1);
  bases.pop_back();  // identity has no off-diagonal content here
  bases.push_back({"log1p", named_series("log1p", max_n + 1)});
  for (const auto& [label, beta] : bases) {
    const Series rev = series_reverse_full(beta.truncated(max_n));
    for (int m = 1; m < max_n; ++m) {
      for (int n = 1; m + n <= max_n; ++n) {
        const Rational via_sum = inverse_power_coefficient(beta, m, n);
        const Rational via_lagrange = series_reverse_lagrange(beta.truncated(max_n), m + n, m);
        const Rational via_reversion = series_pow(rev, static_cast<long>(m))[m + n];
        out.push_back(make_check("thm4.1-lagrange",
                                 Params{{"beta", label}, {"m", str(m)}, {"n", str(n)},
                                        {"route", "lagrange"}},
                                 via_sum, via_lagrange));
        out.push_back(make_check("thm4.1-lagrange",
                                 Params{{"beta", label}, {"m", str(m)}, {"n", str(n)},
                                        {"route", "reversion"}},
                                 via_sum, via_reversion));
      }
    }
  }
}

Rational cor41_lhs(int n, int m) {
  const Int fact_nm1 = factorial(static_cast<unsigned long>(m + n - 1));
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Int denom = fact_nm1;
    for (long ki : mv.k) denom *= factorial(static_cast<unsigned long>(ki));
    Rational term(factorial(static_cast<unsigned long>(w + m + n - 1)), denom);
    if (w % 2 != 0) term = -term;
    sum = sum + term;
  });
  return sum;
}

Rational cor42_lhs(int n) {
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Int num = factorial(static_cast<unsigned long>(w + n));
    Int denom(1);
    for (int i = 1; i <= n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      num *= int_pow(Int(i + 1), static_cast<unsigned long>(ki));
      denom *= factorial(static_cast<unsigned long>(ki));
    }
    Rational term(num, denom);
    if (w % 2 != 0) term = -term;
    sum = sum + term;
  });
  return sum;
}

Rational cor43_lhs(int n) {
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Int denom(1);
    for (int i = 1; i <= n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      denom *= int_pow(factorial(static_cast<unsigned long>(2 * i + 1)),
                       static_cast<unsigned long>(ki)) *
               factorial(static_cast<unsigned long>(ki));
    }
    Rational term(factorial(static_cast<unsigned long>(w + 2 * n)), denom);
    if ((w + n) % 2 != 0) term = -term;
    sum = sum + term;
  });
  return sum;
}

Rational cor44_rhs(int m, int n) {
  Rational sum(0);
  for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
    const long w = mv.weight();
    Int denom(1);
    for (int i = 1; i <= n; ++i) {
      const long ki = mv.k[static_cast<size_t>(i - 1)];
      if (ki == 0) continue;
      denom *= int_pow(Int(i + 1), static_cast<unsigned long>(ki)) *
               factorial(static_cast<unsigned long>(ki));
    }
    Rational term(factorial(static_cast<unsigned long>(w + n + m - 1)), denom);
    if ((w + n) % 2 != 0) term = -term;
    sum = sum + term;
  });
  return Rational(m) * sum;
}

void check_partition_corollaries(Sink& out, int max_n, std::uint64_t) {
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_n; ++m) {
      auto results = verify_partition_sum_corollaries(n, m);
      // The (n, m)-dependent ones every time; the n-only ones once per n.
      for (auto& r : results) {
        if ((r.identity_id == "cor4.2" || r.identity_id == "cor4.3") && m != 1) continue;
        out.push_back(std::move(r));
      }
    }
  }
}

void check_power_sum(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> as = {Rational(1), Rational(2), Rational(Int(1), Int(2)),
                              Rational(Int(-3), Int(7)), rng.rational(), rng.rational()};
  for (int m = 1; m <= max_n; ++m)
    for (const auto& a : as)
      out.push_back(verify_power_sum_identity(m, a));
}

void check_pow_poly(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (int c = 0; c < 3; ++c) {
    const Series f = rng.unit_series(max_n);
    for (int m = 1; m <= max_n; ++m) {
      CheckResult poly_check = verify_pow_poly_identity(f, m);
      poly_check.parameters["case"] = str(c);
      out.push_back(std::move(poly_check));
    }
    // Secondary cross-check: both sides sampled at integer t.
    const int m = max_n;
    const PolyT lhs_poly = coeff_pow_poly_t(f, m);
    std::vector<Rational> lhs_samples;
    std::vector<Rational> rhs_samples;
    for (int t = 0; t <= m; ++t) {
      lhs_samples.push_back(lhs_poly.evaluate(Rational(t)));
      rhs_samples.push_back(series_pow(f.truncated(m), static_cast<long>(t))[m]);
    }
    out.push_back(make_check("thm2.1", Params{{"case", str(c)}, {"m", str(m)}, {"route", "sampled"}},
                             render(lhs_samples), render(rhs_samples)));
  }
}

void check_inverse_pair(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  for (int c = 0; c < 3; ++c) {
    const std::vector<Rational> alpha = rng.rationals(max_n);
    const std::vector<Rational> twice =
        inverse_pair_transform(inverse_pair_transform(alpha, max_n), max_n);
    out.push_back(make_check("thm4.3", Params{{"case", str(c)}, {"N", str(max_n)}},
                             render(twice), render(alpha)));
  }
}

void check_self_inverse(Sink& out, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  const Series identity = named_series("identity", max_n + 1);
  for (int c = 0; c < 3; ++c) {
    const std::vector<Rational> odd = rng.rationals((max_n + 1) / 2);
    const SelfInverseSeries completed = self_inverse_complete(odd, max_n);
    const Series alpha = completed.to_series();
    out.push_back(make_check("thm4.4", Params{{"case", str(c)}, {"N", str(max_n)}},
                             series_compose(alpha, alpha).str(), identity.str()));
    for (int n = 1; n <= max_n; n += 2)
      out.push_back(make_check("eq4.2", Params{{"case", str(c)}, {"n", str(n)}},
                               self_inverse_partial_sum(completed.coeffs, n), Rational(0)));
    auto coeff_at = [&](int idx) {
      return idx <= max_n ? completed.coeffs[static_cast<size_t>(idx - 1)] : Rational(0);
    };
    const auto even = self_inverse_low_even_coeffs(coeff_at(1), coeff_at(3), coeff_at(5), coeff_at(7));
    for (int j = 1; j <= 4; ++j) {
      if (2 * j > max_n) break;
      out.push_back(make_check("eq4.3", Params{{"case", str(c)}, {"n", str(2 * j)}},
                               coeff_at(2 * j), even[static_cast<size_t>(j - 1)]));
    }
  }
}

struct Family {
  const char* name;
  std::vector<std::string> ids;
  void (*run)(Sink&, int, std::uint64_t);
};

const std::vector<Family>& families() {
  static const std::vector<Family> fams = {
      {"series-ring", {"series-ring"}, check_series_ring},
      {"series-pow", {"series-pow"}, check_series_pow},
      {"lemma2.1", {"lemma2.1"}, check_pow_poly_eval},
      {"reversion", {"reverse-roundtrip", "lemma3.2"}, check_reversion},
      {"partition-count", {"partition-count"}, check_partition_count},
      {"stirling-gf", {"stirling-gf"}, check_stirling_gf},
      {"thm4.2", {"thm4.2"}, check_stirling_partition},
      {"thm2.3", {"thm2.3"}, check_stirling_shift},
      {"eq4.1", {"eq4.1"}, check_closed_forms},
      {"thm2.2", {"thm2.2"}, check_egf_shift},
      {"transform-roundtrip", {"thm3.2-roundtrip", "thm3.3-roundtrip"}, check_transform_roundtrip},
      {"thm3.1", {"thm3.1"}, check_involution},
      {"orthogonality", {"thm3.4", "cor3.1"}, check_orthogonality},
      {"thm4.1-lagrange", {"thm4.1-lagrange"}, check_inverse_power},
      {"partition-corollaries", {"cor4.1", "cor4.2", "cor4.3", "cor4.4"}, check_partition_corollaries},
      {"cor2.1", {"cor2.1"}, check_power_sum},
      {"thm2.1", {"thm2.1"}, check_pow_poly},
      {"thm4.3", {"thm4.3"}, check_inverse_pair},
      {"self-inverse", {"thm4.4", "eq4.2", "eq4.3"}, check_self_inverse},
  };
  return fams;
}

}  // namespace

CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       std::string lhs, std::string rhs) {
  CheckResult r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       const Rational& lhs, const Rational& rhs) {
  return make_check(std::move(id), std::move(params), lhs.str(), rhs.str());
}

CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       const PolyT& lhs, const PolyT& rhs) {
  return make_check(std::move(id), std::move(params), lhs.str(), rhs.str());
}

SuiteReport make_report(std::vector<CheckResult> results, std::int64_t elapsed_ms) {
  SuiteReport report;
  report.results = std::move(results);
  report.total = static_cast<int>(report.results.size());
  for (const auto& r : report.results) (r.pass ? report.passed : report.failed)++;
  report.elapsed_ms = elapsed_ms;
  return report;
}

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> ids = [] {
    std::set<std::string> collected;
    for (const auto& fam : families())
      for (const auto& id : fam.ids) collected.insert(id);
    return std::vector<std::string>(collected.begin(), collected.end());
  }();
  return ids;
}

CheckResult verify_pow_poly_identity(const Series& f, int m) {
  const PolyT lhs = coeff_pow_poly_t(f, m);
  const PolyT t = PolyT::variable();
  PolyT rhs;
  for (int r = 1; r <= m; ++r) {
    const Rational scalar = series_pow(f.truncated(m), static_cast<long>(r))[m];
    if (scalar.is_zero()) continue;
    const PolyT weight =
        binomial_poly(PolyT::constant(Rational(m)) - t, static_cast<unsigned long>(m - r)) *
        binomial_poly(t, static_cast<unsigned long>(r));
    rhs = rhs + scalar * weight;
  }
  return make_check("thm2.1", Params{{"m", str(m)}}, lhs, rhs);
}

CheckResult verify_power_sum_identity(int m, const Rational& a) {
  if (m < 1) throw UsageError("power sum identity: m must be >= 1");
  Rational lhs(0);
  for (int r = 1; r <= m; ++r) {
    Rational term = binomial_rat(Rational(m) + a, static_cast<unsigned long>(m - r)) *
                    binomial_rat(a + Rational(r - 1), static_cast<unsigned long>(r)) *
                    Rational(int_pow(Int(r), static_cast<unsigned long>(m)));
    if ((m - r) % 2 != 0) term = -term;
    lhs = lhs + term;
  }
  return make_check("cor2.1", Params{{"m", str(m)}, {"a", a.str()}}, lhs, a.pow_int(m));
}

std::vector<CheckResult> verify_partition_sum_corollaries(int n, int m) {
  if (n < 1 || m < 1) throw UsageError("partition corollaries: need n, m >= 1");
  std::vector<CheckResult> out;
  Rational rhs41(binomial(Int(m + n), static_cast<unsigned long>(m)));
  if (n % 2 != 0) rhs41 = -rhs41;
  out.push_back(make_check("cor4.1", Params{{"n", str(n)}, {"m", str(m)}},
                           cor41_lhs(n, m), rhs41));
  Rational rhs42 = Rational(factorial(static_cast<unsigned long>(n + 1))) *
                   Rational(binomial(Int(2 * n + 2), static_cast<unsigned long>(n + 1)), Int(n + 2));
  if (n % 2 != 0) rhs42 = -rhs42;
  out.push_back(make_check("cor4.2", Params{{"n", str(n)}}, cor42_lhs(n), rhs42));
  const Int dfac = odd_double_factorial(static_cast<unsigned long>(n));
  const Int dfac_sq = dfac * dfac;
  out.push_back(make_check("cor4.3", Params{{"n", str(n)}}, cor43_lhs(n),
                           Rational(dfac_sq)));
  out.push_back(make_check("cor4.4", Params{{"n", str(n)}, {"m", str(m)}},
                           Rational(surjection_sum(m, n)), cor44_rhs(m, n)));
  return out;
}

SuiteReport run_suite(int max_n, std::uint64_t seed, const std::set<std::string>* only) {
  if (max_n < 4) throw UsageError("suite: max_n must be at least 4");
  const auto start = std::chrono::steady_clock::now();
  Sink results;
  for (const auto& fam : families()) {
    const bool wanted =
        !only || std::any_of(fam.ids.begin(), fam.ids.end(),
                             [&](const std::string& id) { return only->count(id) > 0; });
    if (!wanted) continue;
    const size_t before = results.size();
    try {
      fam.run(results, max_n, family_seed(seed, fam.name));
    } catch (const std::exception& e) {
      results.push_back(make_check(fam.ids.front(), Params{{"family", fam.name}},
                                   std::string("exception: ") + e.what(), "no exception"));
    }
    if (only) {
      // Drop results the caller did not ask for (families can emit
      // several ids).
      results.erase(std::remove_if(results.begin() + static_cast<long>(before), results.end(),
                                   [&](const CheckResult& r) {
                                     return only->count(r.identity_id) == 0;
                                   }),
                    results.end());
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return make_report(std::move(results), elapsed);
}

}  // namespace fps
