#include <doctest.h>

#include <sstream>

#include "hilbgen/eta.hpp"
#include "hilbgen/series.hpp"
#include "hilbgen/series_json.hpp"
#include "oracles.hpp"

using namespace hilbgen;

namespace {

Series random_series(int order, long bound, bool zero_constant) {
  Series s(order);
  for (int i = zero_constant ? 1 : 0; i <= order; ++i)
    s.set(i, Rational(BigInt(oracle::uniform(-bound, bound)), BigInt(oracle::uniform(1, 4))));
  return s;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("7").to_string() == "7/1");
  CHECK(Rational::parse("-123456789012345678901234567890/3").is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS(Rational::parse("1/x"));
  std::ostringstream os;
  os << Rational(BigInt(1), BigInt(3)) << " " << Rational(4);
  CHECK(os.str() == "1/3 4");
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(25, 2) == 300);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-24, 2) == 300);
  CHECK(factorial(10) == 3628800);
  CHECK(pow(Rational(BigInt(2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
}

TEST_CASE("truncation is the smaller order") {
  Series a = make_series({1, 1}, 5);
  Series b = make_series({1, -1}, 3);
  Series p = a * b;
  CHECK(p.order() == 3);
  CHECK(p == make_series({1, 0, -1}, 3));
  CHECK_THROWS_AS(a.truncated(7), PreconditionError);
  CHECK_THROWS_AS(Series(-1), PreconditionError);
}

TEST_CASE("polynomial coefficient kinds must agree") {
  PolySeries x = promote(make_series({1, 2}, 2), {"x"});
  PolySeries y = promote(make_series({1, 2}, 2), {"y"});
  CHECK_THROWS_AS(x + y, KindError);
  CHECK_THROWS_AS(x * y, KindError);
  CHECK_NOTHROW(x * x);
}

TEST_CASE("exp and log are inverse") {
  for (int trial = 0; trial < 20; ++trial) {
    Series a = random_series(8, 9, true);
    CHECK(ps_log(ps_exp(a)) == a);
    Series b = ps_exp(a);
    CHECK(ps_exp(ps_log(b)) == b);
  }
  CHECK_THROWS_AS(ps_exp(make_series({1, 1}, 3)), PreconditionError);
  CHECK_THROWS_AS(ps_log(make_series({2, 1}, 3)), PreconditionError);
}

TEST_CASE("inverse and powers") {
  for (int trial = 0; trial < 20; ++trial) {
    Series a = random_series(7, 9, true);
    a.set(0, Rational(oracle::uniform(1, 5)));
    CHECK(a * ps_inverse(a) == Series::one(7));
    CHECK(ps_pow(a, 3) == a * a * a);
    CHECK(ps_pow(a, -2) * ps_pow(a, 2) == Series::one(7));
  }
  CHECK_THROWS_AS(ps_inverse(make_series({0, 1}, 3)), PreconditionError);
}

TEST_CASE("reversion of q + q^2 gives signed Catalan numbers") {
  const int n = 12;
  Series r = ps_revert(make_series({0, 1, 1}, n));
  auto cat = oracle::catalan(n);
  for (int k = 1; k <= n; ++k) {
    BigInt expected = (k % 2 ? 1 : -1) * cat[static_cast<std::size_t>(k - 1)];
    CHECK(r[k] == Rational(expected));
  }
}

TEST_CASE("composition with the reversion is the identity") {
  for (int trial = 0; trial < 10; ++trial) {
    Series f = random_series(8, 5, true);
    f.set(1, Rational(oracle::uniform(1, 3)) * (trial % 2 ? Rational(-1) : Rational(1)));
    Series g = ps_revert(f);
    CHECK(ps_compose(f, g) == Series::monomial(1, Rational(1), 8));
    CHECK(ps_compose(g, f) == Series::monomial(1, Rational(1), 8));
  }
  CHECK_THROWS_AS(ps_revert(make_series({0, 0, 1}, 4)), PreconditionError);
  CHECK_THROWS_AS(ps_compose(make_series({1, 1}, 3), make_series({1, 1}, 3)), PreconditionError);
}

TEST_CASE("D = q d/dq") {
  CHECK(ps_D(make_series({5, 1, 1, 1}, 3)) == make_series({0, 1, 2, 3}, 3));
}

TEST_CASE("eta powers match naive products") {
  for (int m : {-24, -3, -1, 1, 2, 24}) {
    auto expected = oracle::eta_product(m, 30);
    auto e = eta_power(m, 30);
    CHECK(e.prefactor_exponent == Rational(BigInt(m), BigInt(24)));
    for (int k = 0; k <= 30; ++k) CHECK(e.series[k] == Rational(expected[static_cast<std::size_t>(k)]));
  }
  auto p = oracle::partition_counts(60);
  auto inv = eta_power(-1, 60).series;
  for (int k = 0; k <= 60; ++k) CHECK(inv[k] == Rational(p[static_cast<std::size_t>(k)]));
}

TEST_CASE("discriminant") {
  Series d = discriminant(7);
  CHECK(d == make_series({0, 1, -24, 252, -1472, 4830, -6048, -16744}, 7));
  Series inv = eta_power(-24, 3).series;
  CHECK(inv == make_series({1, 24, 324, 3200}, 3));
}

TEST_CASE("series json roundtrip") {
  Series s = make_series({1, Rational(BigInt(-3), BigInt(7)), 0, 5}, 3);
  auto j = to_json(s);
  CHECK(j["coeffs"][1] == "-3/7");
  CHECK(j["order"] == 3);
  CHECK(series_from_json(j) == s);
  PolySeries p = promote(s, {"x", "y"});
  p.set(2, Poly::variable({"x", "y"}, "y") * Rational(2));
  CHECK(poly_series_from_json(to_json(p)) == p);
  CHECK(integer_json(BigInt(12)) == 12);
  CHECK(integer_json(BigInt("123456789012345678901234567890")).is_string());
}
