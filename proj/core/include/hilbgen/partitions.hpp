#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilbgen/rational.hpp"

namespace hilbgen {

/// Integer partition (n_1 ≥ n_2 ≥ … ≥ n_r > 0) of n = Σ n_i.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into weakly decreasing order; zero or negative parts throw.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// α_i, the number of parts equal to i (0 for i outside 1..n).
  int multiplicity(int i) const;
  /// α_1..α_n, indexed from 1 (entry 0 unused and zero).
  std::vector<int> multiplicities() const;

  /// Centralizer order z_α = Π i^{α_i} α_i! of a permutation of this cycle type.
  BigInt centralizer_order() const;
  /// Size n!/z_α of the conjugacy class of this cycle type in S_n.
  BigInt class_size() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, each once, in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<Partition> partitions_of(int n);

/// Age of a permutation of this cycle type acting on a power of a surface:
/// each k-cycle contributes k-1, so age = n - |α|.
int age(const Partition& p);

/// Default bound for brute-force enumeration over S_n × S_n.
inline constexpr int kCommutingPairsBound = 6;

/// For every commuting pair (g,h) in S_n, the number of orbits of ⟨g,h⟩ on
/// {1..n}. Returned sorted in decreasing order. Throws PreconditionError when
/// n exceeds `bound`.
std::vector<int> commuting_pairs_orbit_counts(int n, int bound = kCommutingPairsBound);

}  // namespace hilbgen
