#include <doctest.h>

#include <chrono>

#include "hilbgen/fock.hpp"
#include "hilbgen/relations.hpp"
#include "hilbgen/surface.hpp"

using namespace hilbgen;

namespace {

FrobeniusModel model_of(const std::string& name) { return *surface_fixture(name).model; }

std::size_t index_of_degree(const FrobeniusModel& m, int d) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.degree(i) == d) return i;
  FAIL("no class of degree " << d);
  return 0;
}

CheckOptions small(int w, int l) {
  CheckOptions o;
  o.weight_bound = w;
  o.level_bound = l;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("graded dimensions agree with the Hilbert scheme tables") {
  for (const auto& name : fixture_names()) {
    auto s = surface_fixture(name);
    const int w = name == "k3" ? 3 : 5;
    auto fock = fock_graded_dimensions(*s.model, w);
    auto hilb = hilbert_poincare(s.topology, w);
    for (int n = 0; n <= w; ++n) CHECK(fock[static_cast<std::size_t>(n)] == hilb[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("creation and annihilation on the vacuum") {
  FockSpace space(model_of("k3"));
  const auto& m = space.model();
  const std::size_t pt = index_of_degree(m, 4), one = m.unit_index();
  auto v = space.vacuum();
  CHECK(space.apply_basis_op(1, one, v).is_zero());
  auto created = space.apply_basis_op(-1, pt, v);
  CHECK(space.weight(created.terms().front().first) == 1);
  CHECK(space.apply_basis_op(1, one, created) == v);
  // level 2: (-1)^{2-1}·2 = -2
  auto two = space.apply_basis_op(-2, pt, v);
  CHECK(space.apply_basis_op(2, one, two) == v * Rational(-2));
  CHECK(space.apply({0, m.unit()}, created).is_zero());
}

TEST_CASE("odd creation operators square to zero") {
  FockSpace space(model_of("abelian"));
  const std::size_t a = index_of_degree(space.model(), 1);
  auto once = space.apply_basis_op(-1, a, space.vacuum());
  CHECK_FALSE(once.is_zero());
  CHECK(space.apply_basis_op(-1, a, once).is_zero());
  CHECK(space.is_odd(once.terms().front().first));
}

TEST_CASE("diagonal pushforward") {
  for (const auto& name : fixture_names()) {
    auto m = model_of(name);
    CAPTURE(name);
    // δ_* of the unit multiplies back to the Euler class
    CHECK(multiply_legs(m, diagonal_pushforward(m, m.unit())) == m.euler_class());
    CHECK(diagonal_pushforward(m, m.zero()).empty());
    for (std::size_t i = 0; i < m.dim(); ++i)
      CHECK(multiply_legs(m, diagonal_pushforward(m, m.basis_element(i))) == m.multiply(m.basis_element(i), m.euler_class()));
  }
  CHECK(diagonal_pushforward(model_of("k3"), model_of("k3").unit()).size() == 24);
}

TEST_CASE("Heisenberg relations") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    FockSpace space(model_of(name));
    auto r = check_heisenberg_relations(space, small(2, 2));
    CHECK(r.passed());
    CHECK(r.verified_weight == 2);
    CHECK(r.states_checked == r.states_total);
  }
  FockSpace p2(model_of("p2"));
  CHECK(check_heisenberg_relations(p2, small(4, 3)).passed());

  FockSpace flipped(model_of("p2"), AdjointConvention::Flipped);
  auto bad = check_heisenberg_relations(flipped, small(2, 2));
  CHECK_FALSE(bad.passed());
  CHECK(bad.failure_count() > 0);
  bool has_witness = false;
  for (const auto& e : bad.entries) has_witness |= e.witness.has_value();
  CHECK(has_witness);
}

TEST_CASE("Virasoro relations") {
  FockSpace p2(model_of("p2"));
  CHECK(check_virasoro_relations(p2, small(3, 2)).passed());
  CHECK_FALSE(check_virasoro_relations(p2, small(2, 2), VirasoroConvention::AsPrinted).passed());
  FockSpace ab(model_of("abelian"));
  CHECK_THROWS_AS(check_virasoro_relations(ab, small(1, 1)), PreconditionError);
}

TEST_CASE("central term is (n^3 - n)/12 times the second Chern number") {
  for (const auto& name : {"k3", "p2"}) {
    FockSpace space(model_of(name));
    const auto& m = space.model();
    Rational c2 = m.integrate(m.euler_class());
    for (int n = 1; n <= 3; ++n)
      CHECK(virasoro_central_value(space, n, m.unit(), m.unit()) == Rational(n * n * n - n, 12) * c2);
  }
}

TEST_CASE("deadline and threads") {
  FockSpace p2(model_of("p2"));
  auto opts = small(4, 2);
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  auto r = check_heisenberg_relations(p2, opts);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.passed());
  CHECK(r.states_checked < r.states_total);

  auto one = check_heisenberg_relations(p2, small(3, 2));
  auto opts3 = small(3, 2);
  opts3.threads = 3;
  auto three = check_heisenberg_relations(p2, opts3);
  auto j1 = one.to_json(), j3 = three.to_json();
  j1.erase("seconds");
  j3.erase("seconds");
  CHECK(j1 == j3);
}
