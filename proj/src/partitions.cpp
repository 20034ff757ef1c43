#include "fps/partitions.hpp"

namespace fps {

long MultiplicityVector::weight() const {
  long w = 0;
  for (long ki : k) w += ki;
  return w;
}

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(int n) {
  std::vector<MultiplicityVector> out;
  for_each_multiplicity_vector(n, [&out](const MultiplicityVector& mv) { out.push_back(mv); });
  return out;
}

Int partition_count(int n) {
  if (n < 0) throw UsageError("partition_count: n must be >= 0");
  std::vector<Int> p(static_cast<size_t>(n) + 1);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Int acc(0);
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      const long g2 = j * (3 * j + 1) / 2;
      if (g1 > i && g2 > i) break;
      const bool positive = (j % 2) == 1;
      if (g1 <= i) acc += positive ? p[i - g1] : -p[i - g1];
      if (g2 <= i) acc += positive ? p[i - g2] : -p[i - g2];
    }
    p[i] = acc;
  }
  return p[n];
}

}  // namespace fps
