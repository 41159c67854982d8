#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hilbgen/error.hpp"
#include "hilbgen/partitions.hpp"
#include "oracles.hpp"

using namespace hilbgen;

TEST_CASE("partition counts") {
  auto p = oracle::partition_counts(25);
  for (int n = 0; n <= 25; ++n) CHECK(BigInt(partitions_of(n).size()) == p[static_cast<std::size_t>(n)]);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0).front().length() == 0);
}

TEST_CASE("partitions are distinct and listed in reverse lexicographic order") {
  auto ps = partitions_of(6);
  std::set<std::vector<int>> seen;
  for (const auto& p : ps) {
    CHECK(p.n() == 6);
    CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
    seen.insert(p.parts());
  }
  CHECK(seen.size() == ps.size());
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].parts() > ps[i].parts());
  CHECK(ps.front().to_string() == "(6)");
  CHECK(ps.back().to_string() == "(1,1,1,1,1,1)");
}

TEST_CASE("class sizes") {
  Partition p({1, 2});
  CHECK(p.parts() == std::vector<int>{2, 1});
  CHECK(p.centralizer_order() == 2);
  CHECK(p.class_size() == 3);
  CHECK(p.multiplicity(1) == 1);
  CHECK(p.multiplicity(3) == 0);
  CHECK(age(p) == 1);
  CHECK(age(Partition({1, 1, 1})) == 0);
  for (int n = 1; n <= 9; ++n) {
    BigInt total = 0;
    for (const auto& q : partitions_of(n)) total += q.class_size();
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
  CHECK_THROWS_AS(Partition({2, 0}), PreconditionError);
}

TEST_CASE("commuting pairs") {
  CHECK(commuting_pairs_orbit_counts(0) == std::vector<int>{0});
  CHECK(commuting_pairs_orbit_counts(1) == std::vector<int>{1});
  CHECK(commuting_pairs_orbit_counts(2) == std::vector<int>{2, 1, 1, 1});
  CHECK(commuting_pairs_orbit_counts(3).size() == 18);
  // the number of commuting pairs in S_n is n! p(n)
  auto p = oracle::partition_counts(6);
  for (int n = 0; n <= 5; ++n) {
    auto counts = commuting_pairs_orbit_counts(n);
    CHECK(BigInt(counts.size()) == factorial(static_cast<unsigned>(n)) * p[static_cast<std::size_t>(n)]);
    CHECK(std::is_sorted(counts.rbegin(), counts.rend()));
    // only the pair (id, id) has n orbits
    CHECK(std::count(counts.begin(), counts.end(), n) == 1);
  }
  CHECK_THROWS_AS(commuting_pairs_orbit_counts(7), PreconditionError);
  CHECK_THROWS_AS(commuting_pairs_orbit_counts(4, 3), PreconditionError);
}
