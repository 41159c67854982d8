#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hilbgen/curves.hpp"
#include "oracles.hpp"

using namespace hilbgen;

namespace {

Series series_of(std::initializer_list<long> c, int order) {
  std::vector<Rational> v(c.begin(), c.end());
  return Series(v, order);
}

CurveInvariants random_invariants() {
  return {Rational(oracle::uniform(-20, 20)), Rational(oracle::uniform(-3, 3)), Rational(oracle::uniform(-20, 20)),
          Rational(oracle::uniform(-10, 10))};
}

std::vector<KnownCount> counts_from(const BSeriesPair& b, int delta_max, int points) {
  auto polys = extract_node_polynomials(b, delta_max);
  std::vector<KnownCount> out;
  for (int p = 0; p < points; ++p) {
    auto inv = random_invariants();
    for (int d = 1; d <= delta_max; ++d) out.push_back({inv, d, polys[static_cast<std::size_t>(d)].evaluate(inv)});
  }
  return out;
}

std::vector<KnownCount> p2_counts() {
  std::ifstream in(std::string(HILBGEN_FIXTURE_DIR) + "/p2_node_counts.txt");
  REQUIRE(in);
  return parse_known_counts(in);
}

}  // namespace

TEST_CASE("Yau-Zaslow series") {
  auto expected = oracle::eta_product(-24, 20);
  auto yz = yau_zaslow(20);
  for (int k = 0; k <= 20; ++k) CHECK(yz[k] == Rational(expected[static_cast<std::size_t>(k)]));
  CHECK(yau_zaslow(3) == series_of({1, 24, 324, 3200}, 3));
  CHECK_THROWS_AS(yau_zaslow(-1), PreconditionError);
}

TEST_CASE("G2 coefficients are divisor sums") {
  auto g2 = G2_series(50);
  CHECK(g2[0] == Rational(-1, 24));
  for (int n = 1; n <= 50; ++n) CHECK(g2[n] == Rational(oracle::sigma1(n)));
  CHECK(ps_D(G2_series(4)) == series_of({0, 1, 6, 12, 28}, 4));
}

TEST_CASE("node polynomials") {
  auto t = extract_node_polynomials(BSeriesPair::trivial(4), 4);
  REQUIRE(t.size() == 5);
  CHECK(t[0].poly == Poly::constant(node_variables(), 1));
  Poly x = Poly::variable(node_variables(), "x"), y = Poly::variable(node_variables(), "y");
  CHECK(t[1].poly == x * Rational(6) + y * Rational(6));
  for (int d = 0; d <= 4; ++d) CHECK(t[static_cast<std::size_t>(d)].poly.total_degree() <= d);
  CHECK_THROWS_AS(extract_node_polynomials(BSeriesPair::trivial(2), 4), PreconditionError);
}

TEST_CASE("evaluating node polynomials reproduces the series in s") {
  BSeriesPair b{series_of({1, 2, -1, 3}, 3), series_of({1, -1, 4, 0}, 3), 3};
  auto t = extract_node_polynomials(b, 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto inv = random_invariants();
    auto s = node_series_in_s(inv, b, 3);
    for (int d = 0; d <= 3; ++d) CHECK(s[d] == t[static_cast<std::size_t>(d)].evaluate(inv));
  }
}

TEST_CASE("formal and numeric generating functions agree") {
  BSeriesPair b{series_of({1, 1, 2}, 2), series_of({1, -3, 1}, 2), 2};
  auto formal = node_generating_function_formal(b, 2);
  for (int trial = 0; trial < 5; ++trial) {
    auto inv = random_invariants();
    std::vector<Rational> pt{inv.x, inv.y, inv.z, inv.w};
    CHECK(evaluate(formal, pt) == node_generating_function(inv, b, 2));
  }
}

TEST_CASE("K3 consistency") {
  auto r = k3_consistency(8);
  CHECK(r.passed());
  CHECK(r.offset == 0);
  CHECK(r.offset_validated);
  CHECK(r.rows.size() == 9);
  CHECK_THROWS_AS(k3_consistency(11), PreconditionError);
}

TEST_CASE("parsing known counts") {
  std::istringstream in("# comment\n1 2 3 4 1 5\n\n1 2 3 4 2 7/2 # trailing\n");
  auto k = parse_known_counts(in);
  REQUIRE(k.size() == 2);
  CHECK(k[1].count == Rational(7, 2));
  CHECK(k[0].inv.w == Rational(4));
  std::istringstream bad("1 2 3\n");
  CHECK_THROWS_AS(parse_known_counts(bad), PreconditionError);
}

TEST_CASE("calibration") {
  SUBCASE("no input is underdetermined") {
    auto r = calibrate_B({}, 2);
    CHECK(r.consistent);
    CHECK_FALSE(r.determined);
    CHECK(r.orders.front().status == "underdetermined");
  }
  SUBCASE("K-trivial inputs cannot see B") {
    std::vector<KnownCount> k;
    for (int g = 1; g <= 3; ++g) k.push_back({{Rational(g + 1), Rational(2), 0, 0}, 1, Rational(24)});
    auto r = calibrate_B(k, 1);
    CHECK(r.orders.front().rank == 0);
  }
  SUBCASE("synthetic B is recovered") {
    for (int trial = 0; trial < 3; ++trial) {
      BSeriesPair b = BSeriesPair::trivial(3);
      for (int d = 1; d <= 3; ++d) {
        b.B1.set(d, Rational(oracle::uniform(-10, 10)));
        b.B2.set(d, Rational(oracle::uniform(-10, 10)));
      }
      auto r = calibrate_B(counts_from(b, 3, 3), 3);
      CHECK(r.consistent);
      CHECK(r.determined);
      CHECK(r.b.B1 == b.B1);
      CHECK(r.b.B2 == b.B2);
    }
  }
  SUBCASE("plane curve counts") {
    auto counts = p2_counts();
    auto r = calibrate_B(counts, 2);
    CHECK(r.consistent);
    CHECK(r.determined);
    CHECK(r.integral);
    CHECK(r.b.B1 == series_of({1, 5, 2}, 2));
    CHECK(r.b.B2 == series_of({1, -1, -5}, 2));
    auto t = extract_node_polynomials(r.b, 2);
    for (const auto& c : counts) CHECK(t[static_cast<std::size_t>(c.delta)].evaluate(c.inv) == c.count);
  }
  SUBCASE("an inconsistent count is reported") {
    auto counts = p2_counts();
    counts[2].count += 1;
    auto r = calibrate_B(counts, 2);
    CHECK_FALSE(r.consistent);
    CHECK(r.orders.front().status == "inconsistent");
    REQUIRE(r.orders.front().offending.has_value());
    CHECK(*r.orders.front().offending == 2);
  }
}
