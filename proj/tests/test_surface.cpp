#include <doctest.h>

#include <algorithm>

#include "hilbgen/error.hpp"
#include "hilbgen/surface.hpp"

using namespace hilbgen;

namespace {

bool has_failure(const FrobeniusReport& r, const std::string& check) {
  return std::any_of(r.failures.begin(), r.failures.end(), [&](const auto& f) { return f.check == check; });
}

// Rebuilds a model with its structure constants passed through `edit`.
template <class Edit>
FrobeniusModel rebuilt(const FrobeniusModel& m, Edit edit, FrobeniusModel::Element euler = {}) {
  std::vector<FrobeniusModel::Product> products;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      for (const auto& [k, c] : m.product_terms(i, j)) products.push_back({i, j, k, c});
  edit(products);
  return FrobeniusModel(m.degrees(), m.unit_index(), products, m.integral_values(),
                        euler.empty() ? m.euler_class() : euler, m.labels(), m.canonical_class());
}

}  // namespace

TEST_CASE("fixtures are valid") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Surface s = surface_fixture(name);
    REQUIRE(s.model);
    CHECK_NOTHROW(validate_topology(s.topology));
    auto report = validate_frobenius(*s.model, &s.topology);
    CHECK(report.passed);
    CHECK(report.failures.empty());
  }
  CHECK(euler_number(surface_fixture("k3").topology) == 24);
  CHECK(euler_number(surface_fixture("p2").topology) == 3);
  CHECK(euler_number(surface_fixture("abelian").topology) == 0);
  CHECK_THROWS_AS(surface_fixture("enriques"), PreconditionError);
}

TEST_CASE("topology validation") {
  SurfaceTopology bad{"bad", {1, 0, 3, 0, 2}, 1, 9, false};
  CHECK_THROWS_AS(validate_topology(bad), PreconditionError);
  SurfaceTopology negative{"neg", {1, -1, 3, -1, 1}, 1, 9, false};
  CHECK_THROWS_AS(validate_topology(negative), PreconditionError);
}

TEST_CASE("Riemann-Roch consistency") {
  auto p2 = surface_fixture("p2").topology;
  // L = dH: χ(L) = (d+1)(d+2)/2, L² = d², L·K = -3d
  for (int d = 1; d <= 6; ++d) CHECK(riemann_roch_consistent(p2, {(d + 1) * (d + 2) / 2, -3 * d, d * d}) == true);
  CHECK(riemann_roch_consistent(p2, {5, -3, 1}) == false);
  CHECK_FALSE(riemann_roch_consistent(p2, {5, -3, std::nullopt}).has_value());
}

TEST_CASE("validation finds broken models") {
  const FrobeniusModel k3 = *surface_fixture("k3").model;
  auto no_assoc = rebuilt(k3, [](auto& p) { p.push_back({1, 2, 3, 1}); p.push_back({2, 1, 3, 1}); });
  auto r = validate_frobenius(no_assoc);
  CHECK_FALSE(r.passed);
  CHECK(has_failure(r, "associativity"));

  auto wrong_euler = k3.zero();
  wrong_euler[23] = 20;
  auto k3_top = surface_fixture("k3").topology;
  auto r2 = validate_frobenius(rebuilt(k3, [](auto&) {}, wrong_euler), &k3_top);
  CHECK(has_failure(r2, "euler-number"));

  auto degenerate = rebuilt(k3, [](auto& p) {
    p.erase(std::remove_if(p.begin(), p.end(), [](const auto& t) { return t.i == 1 && t.j == 1; }), p.end());
  });
  auto r3 = validate_frobenius(degenerate);
  CHECK(has_failure(r3, "nondegeneracy"));
  CHECK_THROWS_AS(degenerate.dual_basis(), ComputationError);

  auto anticommuting = rebuilt(k3, [](auto& p) {
    for (auto& t : p)
      if (t.i == 2 && t.j == 2) t.c = -t.c;
    p.push_back({2, 3, 23, 1});
  });
  CHECK(has_failure(validate_frobenius(anticommuting), "graded-commutativity"));
}

TEST_CASE("dual basis") {
  for (const auto& name : fixture_names()) {
    const auto m = *surface_fixture(name).model;
    auto dual = m.dual_basis();
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        CHECK(m.integrate(m.multiply(m.basis_element(i), dual[j])) == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("abelian surface model is an exterior algebra") {
  const auto m = *surface_fixture("abelian").model;
  CHECK(m.degree_counts() == std::vector<int>{1, 4, 6, 4, 1});
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.is_odd(i)) CHECK(m.multiply(m.basis_element(i), m.basis_element(i)) == m.zero());
}

TEST_CASE("surface json roundtrip") {
  for (const auto& name : fixture_names()) {
    Surface s = surface_fixture(name);
    Surface back = surface_from_json(surface_to_json(s));
    CHECK(back.topology.betti == s.topology.betti);
    CHECK(back.topology.chi_O == s.topology.chi_O);
    CHECK(back.topology.K2 == s.topology.K2);
    REQUIRE(back.model);
    CHECK(back.model->degrees() == s.model->degrees());
    CHECK(back.model->euler_class() == s.model->euler_class());
    CHECK(validate_frobenius(*back.model, &back.topology).passed);
  }
  Surface file = load_surface(HILBGEN_FIXTURE_DIR "/p2.json");
  CHECK(file.topology.name == "p2");
  CHECK(resolve_surface(HILBGEN_FIXTURE_DIR "/p2.json").topology.betti == file.topology.betti);
  CHECK_THROWS_AS(load_surface(HILBGEN_FIXTURE_DIR "/missing.json"), PreconditionError);
}

TEST_CASE("topology-only surfaces get a default model") {
  SurfaceTopology s{"quadric", {1, 0, 2, 0, 1}, 1, 8, false};
  auto m = default_frobenius(s, 1);
  CHECK(validate_frobenius(m, &s).passed);
}
