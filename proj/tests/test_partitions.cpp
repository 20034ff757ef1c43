#include <doctest.h>

#include <set>

#include "fps/partitions.hpp"

using namespace fps;

TEST_CASE("multiplicity vectors of 4, exact order") {
  const auto vs = enumerate_multiplicity_vectors(4);
  REQUIRE(vs.size() == 5);
  CHECK(vs[0].k == std::vector<long>{4, 0, 0, 0});
  CHECK(vs[1].k == std::vector<long>{2, 1, 0, 0});
  CHECK(vs[2].k == std::vector<long>{0, 2, 0, 0});
  CHECK(vs[3].k == std::vector<long>{1, 0, 1, 0});
  CHECK(vs[4].k == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("small edge cases") {
  const auto one = enumerate_multiplicity_vectors(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].k == std::vector<long>{1});

  // n = 0: exactly one empty vector (the empty sum).
  const auto zero = enumerate_multiplicity_vectors(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].k.empty());
  CHECK(zero[0].weight() == 0);

  CHECK_THROWS_AS(enumerate_multiplicity_vectors(-1), UsageError);
}

TEST_CASE("pentagonal recurrence values") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(6) == 11);
  CHECK(partition_count(30) == 5604);
  CHECK(partition_count(40) == 37338);
  CHECK_THROWS_AS(partition_count(-2), UsageError);
}

TEST_CASE("enumeration agrees with the pentagonal count up to 40") {
  for (int n = 0; n <= 40; ++n) {
    long count = 0;
    for_each_multiplicity_vector(n, [&](const MultiplicityVector&) { ++count; });
    CHECK(Int(count) == partition_count(n));
  }
}

TEST_CASE("every vector is well-formed and distinct") {
  for (int n = 0; n <= 14; ++n) {
    std::set<std::vector<long>> seen;
    for_each_multiplicity_vector(n, [&](const MultiplicityVector& mv) {
      REQUIRE(static_cast<int>(mv.k.size()) == n);
      long total = 0;
      for (int i = 1; i <= n; ++i) total += i * mv.k[static_cast<size_t>(i - 1)];
      CHECK(total == n);
      if (n >= 1) {
        CHECK(mv.weight() >= 1);
        CHECK(mv.weight() <= n);
      }
      seen.insert(mv.k);
    });
    CHECK(Int(static_cast<long>(seen.size())) == partition_count(n));
  }
}
