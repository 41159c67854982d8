#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/fock.hpp"

namespace hilbgen {

/// Normalization of the quadratic Virasoro operators.
///
/// `Normalized`: L_n(α) = ½ Σ_{ν} t_ν t_{n-ν} :p_ν p_{n-ν}: δ_*(α) over all ν ≠ 0, n,
/// with t_ν = 1 for ν > 0 and t_ν = (-1)^{ν+1} for ν < 0. This is the form that
/// satisfies the Virasoro relations together with [p_n, p_m] = (-1)^{n-1} n δ ∫.
///
/// `AsPrinted`: L_n(α) = Σ_ν :p_ν p_{n-ν}: δ_*(α) for n ≠ 0 and
/// L_0(α) = Σ_{ν>0} :p_{-ν} p_ν: δ_*(α), without the ½ or the signs. It does not
/// satisfy the relations and is kept so tests can show that.
enum class VirasoroConvention { Normalized, AsPrinted };

/// L_n(α) applied to v. Normal ordering puts creation operators to the left.
FockState apply_virasoro(const FockSpace& space, int n, const FrobeniusModel::Element& alpha, const FockState& v,
                         VirasoroConvention convention = VirasoroConvention::Normalized);

struct RelationWitness {
  std::size_t left_class = 0;
  std::size_t right_class = 0;
  std::string state;
  std::string lhs;
  std::string rhs;
};

/// Aggregate over all class pairs and basis states for one (n, m).
struct RelationEntry {
  std::string relation;
  int n = 0;
  int m = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<RelationWitness> witness;
};

struct RelationReport {
  std::string relation;
  int weight_bound = 0;
  int level_bound = 0;
  std::vector<RelationEntry> entries;
  /// False when the deadline stopped the check before every state was visited.
  bool complete = true;
  /// Largest w such that all states of weight ≤ w were checked (-1 if none).
  int verified_weight = -1;
  std::size_t states_checked = 0;
  std::size_t states_total = 0;
  double seconds = 0;

  std::size_t failure_count() const;
  bool passed() const { return complete && failure_count() == 0; }
  nlohmann::json to_json() const;
};

struct CheckOptions {
  int weight_bound = 6;
  int level_bound = 4;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// 0: read HILBGEN_THREADS, defaulting to the hardware concurrency.
  unsigned threads = 0;
};

/// Exhaustive supercommutator check of [p_n(e_i), p_m(e_j)] = (-1)^{n-1} n δ_{n,-m} ∫ e_i e_j
/// for all basis classes, 0 < |n|,|m| ≤ level_bound and basis states of weight ≤ weight_bound.
RelationReport check_heisenberg_relations(const FockSpace& space, const CheckOptions& options);

/// Exhaustive check of
///   [L_n(e_a), L_m(e_b)] = (n-m) L_{n+m}(e_a e_b) + δ_{n,-m} (n³-n)/12 ∫ c_2 e_a e_b
/// for |n|,|m| ≤ level_bound. Rejects models with odd classes (PreconditionError).
RelationReport check_virasoro_relations(const FockSpace& space, const CheckOptions& options,
                                        VirasoroConvention convention = VirasoroConvention::Normalized);

/// The scalar c with ([L_n(α), L_{-n}(β)] - 2n L_0(αβ)) |0> = c |0>.
Rational virasoro_central_value(const FockSpace& space, int n, const FrobeniusModel::Element& alpha,
                                const FrobeniusModel::Element& beta,
                                VirasoroConvention convention = VirasoroConvention::Normalized);

/// Worker count from HILBGEN_THREADS (≥ 1), else the hardware concurrency.
unsigned configured_threads();

}  // namespace hilbgen
