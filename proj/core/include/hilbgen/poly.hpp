#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hilbgen/rational.hpp"

namespace hilbgen {

/// Sparse Laurent polynomial with exact rational coefficients in a fixed, named
/// list of variables. Two polynomials are of the same kind iff their variable
/// lists are identical; arithmetic across kinds throws KindError.
class Poly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rational>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars);

  static Poly constant(std::vector<std::string> vars, const Rational& c);
  static Poly monomial(std::vector<std::string> vars, Exponent exps, const Rational& c = 1);
  static Poly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;
  std::size_t index_of(const std::string& var) const;

  /// Adds c·x^e in place.
  void add_term(const Exponent& e, const Rational& c);

  /// Highest total degree over all terms; -1 for the zero polynomial.
  int total_degree() const;

  /// Drops every term whose exponent in variable `var` exceeds `max_exp`.
  Poly truncated(std::size_t var, int max_exp) const;

  /// Evaluation at a rational point; throws std::domain_error on 0^negative.
  Rational evaluate(std::span<const Rational> point) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string() const;

 private:
  void require_same_kind(const Poly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace hilbgen
