#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hilbgen/partitions.hpp"
#include "hilbgen/series.hpp"
#include "hilbgen/surface.hpp"

namespace hilbgen {

/// Poincaré polynomial Σ b_i z^i stored by its (non-negative) Betti numbers.
/// The Euler number is the alternating evaluation Σ (-1)^i b_i, i.e. the value
/// at z = 1 of the signed polynomial Σ (-1)^i b_i z^i.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<BigInt> betti);

  static PoincarePolynomial one() { return PoincarePolynomial({BigInt(1)}); }

  const std::vector<BigInt>& betti() const { return betti_; }
  /// b_i; zero outside the stored range.
  BigInt operator[](int i) const;
  int degree() const { return static_cast<int>(betti_.size()) - 1; }

  BigInt euler() const;
  BigInt total_dimension() const;
  /// b_i = b_{2c-i} for all i.
  bool is_palindromic(int center) const;
  /// Multiplies by z^k, k ≥ 0.
  PoincarePolynomial shifted(int k) const;

  PoincarePolynomial& operator+=(const PoincarePolynomial& rhs);
  friend PoincarePolynomial operator+(PoincarePolynomial a, const PoincarePolynomial& b) { return a += b; }
  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b);

  std::string to_string() const;
  nlohmann::json betti_json() const;

 private:
  void trim();
  std::vector<BigInt> betti_;
};

/// Entry n is the Poincaré polynomial of the n-th space (n = 0..N).
using PoincareTable = std::vector<PoincarePolynomial>;

/// Σ_n p(S^[n], z) t^n = Π_{k≥1} Π_{i=0..4} (1 - z^{2k-2+i} t^k)^{(-1)^{i+1} b_i},
/// with z read through the signed convention p(X,z) = Σ (-1)^i b_i z^i. Factors
/// with k > N cannot reach t^{≤N} and are skipped.
PoincareTable hilbert_poincare(const SurfaceTopology& s, int order);

/// Σ_n p(S^(n), z) t^n = Π_{i=0..4} (1 - z^i t)^{(-1)^{i+1} b_i}.
PoincareTable symmetric_power_poincare(const SurfaceTopology& s, int order);

/// p(S^[n], z) = Σ_{α ∈ P(n)} Π_i p(S^(α_i), z) · z^{2(n - |α|)}; computed from
/// symmetric powers and partitions only.
PoincarePolynomial hilbert_poincare_via_strata(const SurfaceTopology& s, int n);

/// Π_{k≥1} (1 - q^k)^{-e} to order N: Σ e(S^[n]) q^n without the q^{-e/24} prefactor.
Series hilbert_euler_series(int euler, int order);

/// {"n":k,"poincare":[b_0,...,b_{4k}]} (padded to length 4k+1).
nlohmann::json poincare_entry_json(int n, const PoincarePolynomial& p);

}  // namespace hilbgen
