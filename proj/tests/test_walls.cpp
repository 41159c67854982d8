#include <doctest.h>

#include <fstream>

#include "hilbgen/error.hpp"
#include "hilbgen/walls.hpp"
#include "oracles.hpp"

using namespace hilbgen;

namespace {

LatticeVector v(std::initializer_list<long> c) {
  LatticeVector out;
  for (long x : c) out.emplace_back(x);
  return out;
}

// Wall classes by direct filtering of every box vector with a plain integer Gram matrix.
std::vector<LatticeVector> naive_walls(const std::vector<std::vector<long>>& g, const std::vector<long>& c1, long c2,
                                       long lo, long hi) {
  const std::size_t r = g.size();
  auto dot = [&](const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s += a[i] * g[i][j] * b[j];
    return s;
  };
  std::vector<LatticeVector> out;
  std::vector<long> x(r, lo);
  while (true) {
    bool even = true;
    for (std::size_t i = 0; i < r; ++i) even &= ((x[i] + c1[i]) % 2 + 2) % 2 == 0;
    long sq = dot(x, x);
    if (even && sq < 0 && dot(c1, c1) - 4 * c2 <= sq) {
      LatticeVector lv;
      for (long e : x) lv.emplace_back(e);
      out.push_back(lv);
    }
    std::size_t i = r;
    while (i > 0 && x[i - 1] == hi) x[--i] = lo;
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("lattice construction") {
  CHECK_THROWS_AS(Lattice({{1, 2}, {3, 4}}), PreconditionError);
  CHECK_THROWS_AS(Lattice({{1, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Lattice({{1, 0}}), PreconditionError);
  auto l = Lattice::diagonal({1, -1});
  CHECK(l.square(v({2, 1})) == 3);
  CHECK_THROWS_AS(l.dot(v({1}), v({1, 2})), PreconditionError);
}

TEST_CASE("wall classes on the diagonal lattice") {
  auto l = Lattice::diagonal({1, -1});
  auto walls = enumerate_wall_classes(l, v({0, 0}), BigInt(1), -3, 3);
  REQUIRE(walls.size() == 2);
  CHECK(walls[0] == v({0, -2}));
  CHECK(walls[1] == v({0, 2}));
  CHECK(is_wall_class(l, v({0, 2}), v({0, 0}), BigInt(1)));
  CHECK_FALSE(is_wall_class(l, v({0, 1}), v({0, 0}), BigInt(1)));
  CHECK(separates(l, v({0, 2}), v({2, 1}), v({2, -1})));
  CHECK_FALSE(separates(l, v({0, -2}), v({2, 1}), v({2, -1})));
  CHECK_THROWS_AS(enumerate_wall_classes(l, v({0, 0}), BigInt(1), 2, 1), PreconditionError);
}

TEST_CASE("enumeration matches direct filtering") {
  std::vector<std::vector<std::vector<long>>> grams{{{1, 0}, {0, -1}}, {{0, 1}, {1, 0}}, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
  for (const auto& g : grams) {
    std::vector<std::vector<BigInt>> big;
    for (const auto& row : g) big.emplace_back(row.begin(), row.end());
    Lattice l(big);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<long> c1(g.size());
      for (auto& c : c1) c = oracle::uniform(-1, 1);
      long c2 = oracle::uniform(0, 4);
      LatticeVector c1b(c1.begin(), c1.end());
      CHECK(enumerate_wall_classes(l, c1b, BigInt(c2), -4, 4) == naive_walls(g, c1, c2, -4, 4));
    }
  }
}

TEST_CASE("fixture lattice") {
  std::ifstream in(std::string(HILBGEN_FIXTURE_DIR) + "/wall_diag.json");
  REQUIRE(in);
  auto j = nlohmann::json::parse(in);
  auto l = lattice_from_json(j["gram"]);
  CHECK(l.rank() == 2);
  CHECK(lattice_vector_from_json(j["H"]) == v({2, 1}));
  CHECK(lattice_vector_json(v({3, -4})) == nlohmann::json::array({3, -4}));
}
