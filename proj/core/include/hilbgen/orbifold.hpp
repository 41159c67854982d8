#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/hilb.hpp"

namespace hilbgen {

/// One conjugacy class [g]: Poincaré polynomial of X^g/C(g), age a(g), |[g]|.
struct OrbifoldSector {
  std::string label;
  PoincarePolynomial fixed_quotient;
  int age = 0;
  BigInt class_size = 1;
};

struct OrbifoldDatum {
  std::vector<OrbifoldSector> sectors;
  std::optional<BigInt> group_order;
  bool gorenstein = true;
};

/// Throws PreconditionError when the declared group order differs from Σ class sizes
/// or an age is negative.
void validate_orbifold_datum(const OrbifoldDatum& d);

/// [S^n / S_n]: one sector per partition α of n, with X^g/C(g) = Π_i S^(α_i).
OrbifoldDatum symmetric_orbifold_datum(const SurfaceTopology& s, int n);

/// Σ_{[g]} e(X^g/C(g)).
BigInt orbifold_euler(const OrbifoldDatum& d);

/// Σ_{[g]} p(X^g/C(g), z) z^{2 a(g)}.
PoincarePolynomial orbifold_poincare(const OrbifoldDatum& d);

/// (1/n!) Σ_{gh=hg ∈ S_n} e_S^{#orbits of ⟨g,h⟩}. Throws PreconditionError when n
/// exceeds the brute-force bound.
Rational orbifold_euler_bruteforce(long e_s, int n, int bound = kCommutingPairsBound);

nlohmann::json orbifold_datum_json(const OrbifoldDatum& d);

}  // namespace hilbgen
