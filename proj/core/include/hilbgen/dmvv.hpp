#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "hilbgen/series.hpp"

namespace hilbgen {

/// Coefficients c(m,l) of φ = Σ c(m,l) q^m y^l on a finite window
/// 0 ≤ m ≤ m_max, l_min ≤ l ≤ l_max. Entries inside the window that are not
/// stored are zero; entries outside are unknown.
struct DmvvTable {
  std::map<std::pair<int, int>, BigInt> c;
  int m_max = 0;
  int l_min = 0;
  int l_max = 0;

  BigInt at(int m, int l) const;
  void set(int m, int l, const BigInt& v);

  /// Nonzero entries only; windows are not compared.
  bool same_entries(const DmvvTable& other) const;
};

/// Lines "m l c"; blank lines and '#' comments ignored. The window is the
/// bounding box of the listed entries unless a "# window m_max l_min l_max"
/// line overrides it.
DmvvTable parse_dmvv_table(std::istream& in);
std::string format_dmvv_table(const DmvvTable& t);

/// Π_{n≥1, m≥0, l} (1 - p^n q^m y^l)^{-c(nm,l)} to p-order `p_order`, keeping
/// q^{≤ q_order}. Coefficients are Laurent polynomials in (q, y). Throws
/// PreconditionError naming the first factor (n,m) whose c(nm,·) lies outside
/// the table window.
PolySeries dmvv_product(const DmvvTable& table, int p_order, int q_order);

/// Recovers c(j,l) for every j = nm reachable with 1 ≤ n ≤ p_order and
/// 0 ≤ m ≤ q_order, by peeling exponents off log F in increasing p-order.
/// Throws ComputationError when an exponent is not an integer or when two
/// factors with the same nm disagree (F is not of product form).
DmvvTable dmvv_invert(const PolySeries& F, int q_order);

}  // namespace hilbgen
