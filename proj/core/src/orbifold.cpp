#include "hilbgen/orbifold.hpp"

#include "hilbgen/error.hpp"
#include "hilbgen/series_json.hpp"

namespace hilbgen {

void validate_orbifold_datum(const OrbifoldDatum& d) {
  BigInt total = 0;
  for (const auto& s : d.sectors) {
    if (s.age < 0) throw PreconditionError("orbifold datum: negative age in sector " + s.label);
    if (s.class_size <= 0) throw PreconditionError("orbifold datum: class size must be positive in sector " + s.label);
    total += s.class_size;
  }
  if (d.group_order && *d.group_order != total)
    throw PreconditionError("orbifold datum: class sizes sum to " + to_string(total) + ", group order is " +
                            to_string(*d.group_order));
}

OrbifoldDatum symmetric_orbifold_datum(const SurfaceTopology& s, int n) {
  if (n < 0) throw PreconditionError("symmetric_orbifold_datum: n must be non-negative");
  const auto sym = symmetric_power_poincare(s, n);
  OrbifoldDatum d;
  d.group_order = factorial(static_cast<unsigned>(n));
  for (const auto& alpha : partitions_of(n)) {
    OrbifoldSector sector;
    sector.label = alpha.to_string();
    sector.fixed_quotient = PoincarePolynomial::one();
    // a cycle type with α_i parts equal to i fixes a copy of Π_i S^(α_i)
    auto mult = alpha.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i)
      if (mult[i]) sector.fixed_quotient = sector.fixed_quotient * sym[static_cast<std::size_t>(mult[i])];
    sector.age = age(alpha);
    sector.class_size = alpha.class_size();
    d.sectors.push_back(std::move(sector));
  }
  return d;
}

BigInt orbifold_euler(const OrbifoldDatum& d) {
  BigInt e = 0;
  for (const auto& s : d.sectors) e += s.fixed_quotient.euler();
  return e;
}

PoincarePolynomial orbifold_poincare(const OrbifoldDatum& d) {
  PoincarePolynomial p;
  for (const auto& s : d.sectors) p += s.fixed_quotient.shifted(2 * s.age);
  return p;
}

Rational orbifold_euler_bruteforce(long e_s, int n, int bound) {
  if (n < 0) throw PreconditionError("orbifold_euler_bruteforce: n must be non-negative");
  BigInt sum = 0;
  for (int orbits : commuting_pairs_orbit_counts(n, bound)) {
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), BigInt(e_s).get_mpz_t(), static_cast<unsigned long>(orbits));
    sum += term;
  }
  return Rational(sum, factorial(static_cast<unsigned>(n)));
}

nlohmann::json orbifold_datum_json(const OrbifoldDatum& d) {
  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& s : d.sectors)
    sectors.push_back({{"class", s.label},
                       {"poincare", s.fixed_quotient.betti_json()},
                       {"age", s.age},
                       {"class_size", integer_json(s.class_size)}});
  return sectors;
}

}  // namespace hilbgen
