#include <doctest.h>

#include <sstream>

#include "hilbgen/dmvv.hpp"
#include "oracles.hpp"

using namespace hilbgen;

namespace {

bool reachable(int j, int p_order, int q_order) {
  for (int n = 1; n <= p_order; ++n)
    for (int m = 0; m <= q_order; ++m)
      if (n * m == j) return true;
  return false;
}

DmvvTable random_table(int p_order, int q_order, int l_bound) {
  DmvvTable t;
  t.m_max = p_order * q_order;
  t.l_min = -l_bound;
  t.l_max = l_bound;
  for (int m = 0; m <= t.m_max; ++m)
    for (int l = -l_bound; l <= l_bound; ++l)
      if (oracle::uniform(0, 3) == 0) t.set(m, l, oracle::uniform(-3, 3));
  return t;
}

DmvvTable restricted(const DmvvTable& t, int p_order, int q_order) {
  DmvvTable r;
  for (const auto& [ml, c] : t.c)
    if (reachable(ml.first, p_order, q_order)) r.set(ml.first, ml.second, c);
  return r;
}

}  // namespace

TEST_CASE("table parsing") {
  std::istringstream in("# K3\n0 -1 2\n0 0 20\n0 1 2\n\n1 0 216 # comment\n");
  auto t = parse_dmvv_table(in);
  CHECK(t.at(0, 0) == 20);
  CHECK(t.at(1, 0) == 216);
  CHECK(t.at(1, 5) == 0);
  CHECK(t.m_max == 1);
  CHECK(t.l_min == -1);
  CHECK(t.l_max == 1);
  std::istringstream again(format_dmvv_table(t));
  auto back = parse_dmvv_table(again);
  CHECK(back.same_entries(t));
  CHECK(back.m_max == t.m_max);

  std::istringstream bad("0 0 x\n");
  CHECK_THROWS_AS(parse_dmvv_table(bad), PreconditionError);
  std::istringstream outside("# window 0 0 0\n1 0 3\n");
  CHECK_THROWS_AS(parse_dmvv_table(outside), PreconditionError);
}

TEST_CASE("single factor") {
  // c(0,0) = 1 gives Π_n (1 - p^n)^{-1}: partition numbers in p
  DmvvTable t;
  t.set(0, 0, 1);
  auto f = dmvv_product(t, 8, 0);
  auto p = oracle::partition_counts(8);
  for (int n = 0; n <= 8; ++n) CHECK(f[n].constant_term() == Rational(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("window violations are named") {
  DmvvTable t;
  t.set(0, 0, 1);
  t.m_max = 2;
  CHECK_NOTHROW(dmvv_product(t, 2, 1));
  CHECK_THROWS_WITH_AS(dmvv_product(t, 3, 1), doctest::Contains("n=3, m=1"), PreconditionError);
}

TEST_CASE("roundtrip on random tables") {
  for (int trial = 0; trial < 15; ++trial) {
    int p = static_cast<int>(oracle::uniform(1, 3)), q = static_cast<int>(oracle::uniform(0, 3));
    auto t = random_table(p, q, 2);
    auto back = dmvv_invert(dmvv_product(t, p, q), q);
    CAPTURE(format_dmvv_table(t));
    CHECK(back.same_entries(restricted(t, p, q)));
  }
}

TEST_CASE("non-product input is rejected") {
  std::vector<std::string> vars{"q", "y"};
  PolySeries f = PolySeries::one(2, Poly(vars));
  f.set(1, Poly::constant(vars, Rational(BigInt(1), BigInt(2))));
  CHECK_THROWS_AS(dmvv_invert(f, 0), ComputationError);
  // 1 + p needs c(0,0) = 1 from the factor n=1 but c(0,0) = -1 from n=2
  PolySeries g = PolySeries::one(2, Poly(vars));
  g.set(1, Poly::constant(vars, 1));
  CHECK_THROWS_AS(dmvv_invert(g, 1), ComputationError);
  PolySeries h = promote(Series::one(2), {"x"});
  CHECK_THROWS_AS(dmvv_invert(h, 1), KindError);
}
