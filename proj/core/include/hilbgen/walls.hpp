#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/rational.hpp"

namespace hilbgen {

using LatticeVector = std::vector<BigInt>;

/// Integral lattice given by a symmetric nondegenerate Gram matrix.
class Lattice {
 public:
  /// Throws PreconditionError for a non-square, non-symmetric or degenerate matrix.
  explicit Lattice(std::vector<std::vector<BigInt>> gram);
  static Lattice diagonal(const std::vector<long>& entries);

  std::size_t rank() const { return gram_.size(); }
  const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
  /// Throws PreconditionError on a length mismatch.
  BigInt dot(const LatticeVector& a, const LatticeVector& b) const;
  BigInt square(const LatticeVector& a) const { return dot(a, a); }

 private:
  std::vector<std::vector<BigInt>> gram_;
};

/// ξ + c1 ∈ 2Λ and c1² - 4c2 ≤ ξ² < 0.
bool is_wall_class(const Lattice& l, const LatticeVector& xi, const LatticeVector& c1, const BigInt& c2);

/// H·ξ < 0 < L·ξ.
bool separates(const Lattice& l, const LatticeVector& xi, const LatticeVector& h, const LatticeVector& line);

/// All wall classes with every coordinate in [lo, hi], in lexicographic order.
/// Complete only inside the box. Throws PreconditionError when lo > hi.
std::vector<LatticeVector> enumerate_wall_classes(const Lattice& l, const LatticeVector& c1, const BigInt& c2, long lo,
                                                  long hi);

LatticeVector lattice_vector_from_json(const nlohmann::json& j);
nlohmann::json lattice_vector_json(const LatticeVector& v);
Lattice lattice_from_json(const nlohmann::json& j);

}  // namespace hilbgen
