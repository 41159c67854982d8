#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/series.hpp"

namespace hilbgen {

/// Σ n_g q^g = q/Δ = Π(1 - q^n)^{-24} to order N.
Series yau_zaslow(int order);

/// G2 = -1/24 · DΔ/Δ to order N; [q^n] G2 = σ_1(n) for n ≥ 1.
Series G2_series(int order);

/// (χ(L), χ(O_S), L·K_S, K_S²), written (x, y, z, w).
struct CurveInvariants {
  Rational x = 0;
  Rational y = 0;
  Rational z = 0;
  Rational w = 0;
};

/// Formal variable names of the node polynomials.
const std::vector<std::string>& node_variables();

struct NodePolynomial {
  int delta = 0;
  Poly poly;  // over node_variables()
  Rational evaluate(const CurveInvariants& inv) const;
};

/// B1, B2 with constant term 1; coefficients of q^1..q^known_order are meaningful.
struct BSeriesPair {
  Series B1;
  Series B2;
  int known_order = 0;
  /// B1 = B2 = 1 to the given order.
  static BSeriesPair trivial(int order);
};

/// (DG2/q)^x · B1^z · B2^w · (Δ·D²G2/q²)^{-y/2} to order N, computed as
/// exp(x log(DG2/q) + z log B1 + w log B2 - (y/2) log(Δ D²G2/q²)).
Series node_generating_function(const CurveInvariants& inv, const BSeriesPair& b, int order);

/// Same with formal x, y, z, w.
PolySeries node_generating_function_formal(const BSeriesPair& b, int order);

/// The numeric generating function rewritten in s = DG2: Σ_δ T_δ(inv) s^δ.
Series node_series_in_s(const CurveInvariants& inv, const BSeriesPair& b, int order);

/// T_0..T_{δmax}. Throws PreconditionError when B is not known to order δmax and
/// ComputationError when some T_δ has total degree above δ.
std::vector<NodePolynomial> extract_node_polynomials(const BSeriesPair& b, int delta_max);

struct KnownCount {
  CurveInvariants inv;
  int delta = 0;
  Rational count;
};

/// Lines "chiL chiO LK K2 delta count"; '#' starts a comment. Throws PreconditionError.
std::vector<KnownCount> parse_known_counts(std::istream& in);

struct CalibrationOrder {
  int delta = 0;
  std::size_t constraints = 0;
  int rank = 0;
  /// "determined", "underdetermined" or "inconsistent".
  std::string status;
  std::optional<std::size_t> offending;  // index into the input list
};

struct CalibrationReport {
  BSeriesPair b;
  std::vector<CalibrationOrder> orders;
  bool consistent = true;
  bool determined = true;
  bool integral = true;
  std::vector<std::size_t> ignored;  // constraints with δ outside 1..δmax
  nlohmann::json to_json() const;
};

/// Order by order, T_δ = z·[q^δ]B1 + w·[q^δ]B2 + (terms in lower coefficients), so
/// each order is a linear system in two unknowns. Free directions are set to zero.
/// known_order is the last δ up to which every order was determined.
CalibrationReport calibrate_B(const std::vector<KnownCount>& known, int delta_max);

struct K3Row {
  int g = 0;
  Rational predicted;  // [s^g] of the generating function at χ(L) = g + 1 + offset
  Rational expected;   // n_g
  bool ok = false;
};

struct K3Report {
  int offset = 0;
  bool offset_validated = false;
  std::vector<K3Row> rows;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Compares T_g(g+1, 2, 0, 0) with n_g for g ≤ g_max (≤ 10). The χ(L) offset is
/// chosen from {-2..2} by requiring agreement at g = 0, 1.
K3Report k3_consistency(int g_max);

}  // namespace hilbgen
