#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/frobenius.hpp"

namespace hilbgen {

/// Betti numbers and numerical invariants of a smooth projective surface.
struct SurfaceTopology {
  std::string name;
  std::array<int, 5> betti{};
  std::optional<int> chi_O;  // χ(O_S)
  std::optional<int> K2;     // K_S²
  /// K_S = 0; the elliptic-genus product is only meaningful under this hypothesis.
  bool k_trivial = false;
};

/// Numerical data of a line bundle L on S.
struct LineBundleData {
  int chi_L = 0;           // χ(L)
  int LK = 0;              // L·K_S
  std::optional<int> L2;   // L²
};

/// b0 = b4, b1 = b3 and non-negative Betti numbers; throws PreconditionError otherwise.
void validate_topology(const SurfaceTopology& s);

/// e(S) = b0 - b1 + b2 - b3 + b4.
int euler_number(const SurfaceTopology& s);

/// Riemann–Roch: χ(L) = χ(O_S) + (L² - L·K)/2. Returns nullopt when L² or
/// χ(O_S) is missing, otherwise whether the data is consistent.
std::optional<bool> riemann_roch_consistent(const SurfaceTopology& s, const LineBundleData& l);

struct Surface {
  SurfaceTopology topology;
  std::optional<FrobeniusModel> model;
};

/// Names of the shipped fixtures: "k3", "p2", "abelian".
std::vector<std::string> fixture_names();

/// Throws PreconditionError for an unknown name.
Surface surface_fixture(const std::string& name);

/// Fixture file schema:
/// {"name":..., "betti":[b0..b4], "chi_O":..., "K2":..., "k_trivial":bool,
///  "frobenius":{"degrees":[...], "labels":[...], "unit":i,
///               "products":[[i,j,k,"c"],...], "integral":["c",...],
///               "euler_class":["c",...], "canonical_class":["c",...]}}
Surface surface_from_json(const nlohmann::json& j);
nlohmann::json surface_to_json(const Surface& s);
Surface load_surface(const std::string& path);

/// Preset name or path to a fixture file.
Surface resolve_surface(const std::string& selector);

/// Model with a diagonal ±1 middle pairing for surfaces with b1 = b3 = 0, or the
/// exterior algebra on four degree-1 generators for Betti numbers (1,4,6,4,1).
FrobeniusModel default_frobenius(const SurfaceTopology& s, int positive_middle = -1);

}  // namespace hilbgen
