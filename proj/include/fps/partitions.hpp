#pragma once

#include <utility>
#include <vector>

#include "fps/rational.hpp"

namespace fps {

/// Multiplicity vector (k_1, ..., k_n) with k_1 + 2*k_2 + ... + n*k_n = n.
/// k always has full length n (trailing zeros included); weight() is
/// k_1 + ... + k_n. For n = 0 the vector is empty.
struct MultiplicityVector {
  int n = 0;
  std::vector<long> k;

  long weight() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

namespace detail {

template <typename Visitor>
void multiplicity_rec(MultiplicityVector& mv, int part, long remaining, Visitor& visit) {
  if (part == 1) {
    mv.k[0] = remaining;
    visit(static_cast<const MultiplicityVector&>(mv));
    mv.k[0] = 0;
    return;
  }
  for (long count = 0; count * part <= remaining; ++count) {
    mv.k[part - 1] = count;
    multiplicity_rec(mv, part - 1, remaining - count * part, visit);
  }
  mv.k[part - 1] = 0;
}

}  // namespace detail

/// Visits every multiplicity vector of n exactly once. The order is part of
/// the contract: the multiplicity of the largest part is chosen first and
/// runs upward from zero, so vectors ascend lexicographically when read as
/// (k_n, ..., k_1). For n = 4 that is (4,0,0,0), (2,1,0,0), (0,2,0,0),
/// (1,0,1,0), (0,0,0,1). For n = 0 the single empty vector is visited.
template <typename Visitor>
void for_each_multiplicity_vector(int n, Visitor&& visit) {
  if (n < 0) throw UsageError("multiplicity vectors: n must be >= 0");
  MultiplicityVector mv{n, std::vector<long>(static_cast<size_t>(n), 0)};
  if (n == 0) {
    visit(static_cast<const MultiplicityVector&>(mv));
    return;
  }
  detail::multiplicity_rec(mv, n, n, visit);
}

/// Materialized enumeration, same order as for_each_multiplicity_vector.
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(int n);

/// p(n) by the Euler pentagonal-number recurrence. Kept independent of the
/// enumerator so the two can check each other.
Int partition_count(int n);

}  // namespace fps
