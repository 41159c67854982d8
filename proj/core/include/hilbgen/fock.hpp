#pragma once

// Fock space F(H) = S*(H ⊗ tQ[t]) over a Frobenius model H, with the
// Heisenberg operators p_n(α).
//
// A basis vector is a canonically ordered monomial in generators a_{k,i}
// (level k ≥ 1, basis class i). Generators with an odd class anticommute and
// square to zero; even ones commute. Generator (k,i) has weight k and
// cohomological degree deg(e_i) + 2(k-1).
//
//   p_{-k}(α), k > 0 : left multiplication by Σ_i α^i a_{k,i}
//   p_k(α),    k > 0 : (-1)^{k-1} k Σ_i ∫(α e_i) ∂/∂a_{k,i}   (graded derivation)
//
// so that the supercommutator [p_n(α), p_m(β)] = (-1)^{n-1} n δ_{n,-m} ∫αβ.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <nlohmann/json.hpp>

#include "hilbgen/frobenius.hpp"
#include "hilbgen/hilb.hpp"

namespace hilbgen {

/// Packed generator key: level in the high half, class index in the low half.
using GeneratorKey = std::uint32_t;

inline constexpr GeneratorKey make_generator(int level, std::size_t cls) {
  return (static_cast<GeneratorKey>(level) << 16) | static_cast<GeneratorKey>(cls);
}
inline constexpr int generator_level(GeneratorKey g) { return static_cast<int>(g >> 16); }
inline constexpr std::size_t generator_class(GeneratorKey g) { return g & 0xffffu; }

/// Sorted generator keys (canonical order: level, then class index).
using Monomial = boost::container::small_vector<GeneratorKey, 8>;

/// Finite exact linear combination of basis monomials, sorted by monomial; zero
/// coefficients are never stored.
class FockState {
 public:
  using Term = std::pair<Monomial, Rational>;
  using TermMap = std::vector<Term>;

  FockState() = default;
  static FockState basis(Monomial m, Rational c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  FockState& operator+=(const FockState& rhs);
  FockState& operator-=(const FockState& rhs);
  FockState& operator*=(const Rational& s);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(FockState a, const Rational& s) { return a *= s; }
  friend FockState operator*(const Rational& s, FockState a) { return a *= s; }
  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  TermMap terms_;
};

/// coeff · e_left ⊗ e_right
struct TensorTerm {
  std::size_t left;
  std::size_t right;
  Rational coeff;
};

/// p_level(cls); level < 0 creates, level > 0 annihilates, level 0 is the zero operator.
struct HeisenbergOp {
  int level = 0;
  FrobeniusModel::Element cls;
};

/// Sign used for the annihilation operators. `Flipped` replaces (-1)^{n-1} n by
/// (-1)^n n and exists to demonstrate that the relation checker notices.
enum class AdjointConvention { Standard, Flipped };

class FockSpace {
 public:
  explicit FockSpace(FrobeniusModel model, AdjointConvention convention = AdjointConvention::Standard);

  const FrobeniusModel& model() const { return model_; }
  AdjointConvention convention() const { return convention_; }

  FockState vacuum() const { return FockState::basis({}); }

  int weight(const Monomial& m) const;
  int degree(const Monomial& m) const;
  /// Parity of the number of odd generators.
  bool is_odd(const Monomial& m) const;
  bool generator_odd(GeneratorKey g) const { return model_.is_odd(generator_class(g)); }

  /// p_level(e_cls) applied to c·m, accumulated into `out`.
  void apply_basis_op(int level, std::size_t cls, const Monomial& m, const Rational& c, FockState& out) const;
  FockState apply_basis_op(int level, std::size_t cls, const FockState& v) const;
  FockState apply(const HeisenbergOp& op, const FockState& v) const;

  /// Every basis monomial of weight ≤ max_weight, in increasing weight, then canonical order.
  std::vector<Monomial> basis_up_to(int max_weight) const;
  /// Visits basis monomials of exactly `weight` without storing them.
  void for_each_basis_monomial(int weight, const std::function<void(const Monomial&)>& visit) const;

  /// δ_*(e_cls), cached. Throws ComputationError when the pairing is singular.
  const std::vector<TensorTerm>& basis_pushforward(std::size_t cls) const;

  std::string to_string(const Monomial& m) const;
  std::string to_string(const FockState& v) const;
  nlohmann::json to_json(const FockState& v) const;

 private:
  FrobeniusModel model_;
  AdjointConvention convention_;
  // For each class c: (i, ∫ e_c e_i) with nonzero pairing.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> pairs_with_;
  std::vector<std::vector<TensorTerm>> pushforward_;  // empty when the pairing is singular
};

/// Generating polynomials in z of the dimensions of each weight space, by
/// cohomological degree, counted by enumerating the monomial basis.
PoincareTable fock_graded_dimensions(const FrobeniusModel& m, int max_weight);

/// δ_*(α) = Σ_i (-1)^{|e_i|} (α e_i) ⊗ e^i expanded in the basis. Throws
/// ComputationError for a singular pairing.
std::vector<TensorTerm> diagonal_pushforward(const FrobeniusModel& m, const FrobeniusModel::Element& alpha);

/// Multiplies the two legs of a tensor back together.
FrobeniusModel::Element multiply_legs(const FrobeniusModel& m, const std::vector<TensorTerm>& t);

}  // namespace hilbgen
