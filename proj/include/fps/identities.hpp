#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fps/polyt.hpp"
#include "fps/rational.hpp"
#include "fps/series.hpp"

namespace fps {

/// One verified identity instance. pass holds exactly when the rendered
/// sides are equal; rendering is injective on the value types used.
struct CheckResult {
  std::string identity_id;
  std::map<std::string, std::string> parameters;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       std::string lhs, std::string rhs);
CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       const Rational& lhs, const Rational& rhs);
CheckResult make_check(std::string id, std::map<std::string, std::string> params,
                       const PolyT& lhs, const PolyT& rhs);

struct SuiteReport {
  std::vector<CheckResult> results;
  int total = 0;
  int passed = 0;
  int failed = 0;
  std::int64_t elapsed_ms = 0;
};

SuiteReport make_report(std::vector<CheckResult> results, std::int64_t elapsed_ms);

/// All identity ids the suite can emit; --only arguments are validated
/// against this list.
const std::vector<std::string>& identity_catalog();

/// Checks that [x^m] f^t, as a polynomial in t, equals the binomial
/// interpolation sum_{r=1}^m binom(m-t, m-r) binom(t, r) [x^m] f^r.
/// Requires f(0) = 1. Emitted under id "thm2.1".
CheckResult verify_pow_poly_identity(const Series& f, int m);

/// Checks sum_{r=1}^m binom(m+a, m-r) (-1)^{m-r} binom(a+r-1, r) r^m = a^m
/// for rational a. Emitted under id "cor2.1".
CheckResult verify_power_sum_identity(int m, const Rational& a);

/// The four partition-sum corollaries at (n, m); the two that do not
/// depend on m are included once. Ids "cor4.1".."cor4.4".
std::vector<CheckResult> verify_partition_sum_corollaries(int n, int m);

/// Runs every module invariant at sizes up to max_n with seeded,
/// per-family deterministic randomness. Identical (max_n, seed) give an
/// identical report apart from the elapsed time. `only`, when non-null,
/// restricts execution to the listed identity ids.
SuiteReport run_suite(int max_n, std::uint64_t seed,
                      const std::set<std::string>* only = nullptr);

}  // namespace fps
