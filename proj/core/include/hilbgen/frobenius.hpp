#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbgen/rational.hpp"

namespace hilbgen {

/// Finite graded-commutative algebra with an integration functional, modeling
/// the rational cohomology ring of a surface. Elements are coefficient vectors
/// in the stored basis.
class FrobeniusModel {
 public:
  using Element = std::vector<Rational>;

  /// e_i · e_j contains c · e_k.
  struct Product {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Rational c;
  };

  FrobeniusModel() = default;

  /// Sizes are checked here; algebraic invariants are checked by validate_frobenius().
  FrobeniusModel(std::vector<int> degrees, std::size_t unit, const std::vector<Product>& products,
                 Element integral, Element euler_class, std::vector<std::string> labels = {},
                 Element canonical_class = {});

  std::size_t dim() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  bool is_odd(std::size_t i) const { return (degrees_[i] & 1) != 0; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t unit_index() const { return unit_; }

  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }
  /// Nonzero (k, c) with e_i e_j = Σ c e_k.
  const std::vector<std::pair<std::size_t, Rational>>& product_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * dim() + j];
  }

  Element zero() const { return Element(dim()); }
  Element basis_element(std::size_t i) const;
  Element unit() const { return basis_element(unit_); }

  Element multiply(const Element& a, const Element& b) const;
  Rational integrate(const Element& a) const;
  /// ∫ e_i e_j.
  const Rational& pairing(std::size_t i, std::size_t j) const { return pairing_[i * dim() + j]; }

  const Element& integral_values() const { return integral_; }
  const Element& euler_class() const { return euler_; }
  /// Canonical class K_S when supplied (zero vector otherwise).
  const Element& canonical_class() const { return canonical_; }

  /// Number of basis elements in each degree 0..4.
  std::vector<int> degree_counts() const;

  /// Exact determinant of the pairing matrix.
  Rational pairing_determinant() const;

  /// {e^i} with ∫ e_i e^j = δ_ij; throws ComputationError when the pairing is singular.
  std::vector<Element> dual_basis() const;

 private:
  std::vector<int> degrees_;
  std::size_t unit_ = 0;
  std::vector<Rational> table_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
  Element integral_;
  Element euler_;
  Element canonical_;
  std::vector<std::string> labels_;
  std::vector<Rational> pairing_;
};

struct FrobeniusFinding {
  std::string check;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

struct FrobeniusReport {
  bool passed = true;
  std::vector<FrobeniusFinding> failures;
};

struct SurfaceTopology;

/// Checks every algebra invariant; failures are collected, never thrown. When a
/// topology is given, also checks ∫ euler_class = e(S) and the degree counts
/// against the Betti numbers.
FrobeniusReport validate_frobenius(const FrobeniusModel& m, const SurfaceTopology* topology = nullptr);

/// Exact determinant by fraction-preserving Gaussian elimination (row-major n×n).
Rational determinant(std::vector<Rational> matrix, std::size_t n);

/// Inverse of a row-major n×n matrix; throws ComputationError when singular.
std::vector<Rational> inverse_matrix(std::vector<Rational> matrix, std::size_t n);

}  // namespace hilbgen
