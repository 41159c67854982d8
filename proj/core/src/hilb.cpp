#include "hilbgen/hilb.hpp"

#include <sstream>

#include "hilbgen/eta.hpp"
#include "hilbgen/series_json.hpp"

namespace hilbgen {

PoincarePolynomial::PoincarePolynomial(std::vector<BigInt> betti) : betti_(std::move(betti)) { trim(); }

void PoincarePolynomial::trim() {
  while (!betti_.empty() && betti_.back() == 0) betti_.pop_back();
}

BigInt PoincarePolynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(betti_.size())) return 0;
  return betti_[static_cast<std::size_t>(i)];
}

BigInt PoincarePolynomial::euler() const {
  BigInt e = 0;
  for (std::size_t i = 0; i < betti_.size(); ++i) e += (i % 2 ? -betti_[i] : betti_[i]);
  return e;
}

BigInt PoincarePolynomial::total_dimension() const {
  BigInt t = 0;
  for (const auto& b : betti_) t += b;
  return t;
}

bool PoincarePolynomial::is_palindromic(int center) const {
  if (degree() > 2 * center) return false;
  for (int i = 0; i <= 2 * center; ++i)
    if ((*this)[i] != (*this)[2 * center - i]) return false;
  return true;
}

PoincarePolynomial PoincarePolynomial::shifted(int k) const {
  if (betti_.empty()) return *this;
  std::vector<BigInt> b(static_cast<std::size_t>(k), BigInt(0));
  b.insert(b.end(), betti_.begin(), betti_.end());
  return PoincarePolynomial(std::move(b));
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& rhs) {
  if (rhs.betti_.size() > betti_.size()) betti_.resize(rhs.betti_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.betti_.size(); ++i) betti_[i] += rhs.betti_[i];
  trim();
  return *this;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  if (a.betti_.empty() || b.betti_.empty()) return {};
  std::vector<BigInt> out(a.betti_.size() + b.betti_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.betti_.size(); ++i)
    for (std::size_t j = 0; j < b.betti_.size(); ++j) out[i + j] += a.betti_[i] * b.betti_[j];
  return PoincarePolynomial(std::move(out));
}

bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) { return a.betti_ == b.betti_; }

std::string PoincarePolynomial::to_string() const {
  if (betti_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < betti_.size(); ++i) {
    if (betti_[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || betti_[i] != 1) os << betti_[i];
    if (i > 0) os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

nlohmann::json PoincarePolynomial::betti_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& b : betti_) a.push_back(integer_json(b));
  return a;
}

nlohmann::json poincare_entry_json(int n, const PoincarePolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i <= 4 * n; ++i) a.push_back(integer_json(p[i]));
  return {{"n", n}, {"poincare", a}};
}

namespace {

// Dense grid g[n][d]: coefficient of t^n z^d in the signed generating function.
class Grid {
 public:
  Grid(int order, int max_degree)
      : order_(order), width_(max_degree + 1), cells_(static_cast<std::size_t>((order + 1) * (max_degree + 1)), BigInt(0)) {
    at(0, 0) = 1;
  }

  BigInt& at(int n, int d) { return cells_[static_cast<std::size_t>(n * width_ + d)]; }

  // Multiply by (1 - z^e t^k): walk n downward so sources are still unmodified.
  void multiply(int e, int k) {
    for (int n = order_; n >= k; --n)
      for (int d = width_ - 1; d >= e; --d) at(n, d) -= at(n - k, d - e);
  }

  // Divide by (1 - z^e t^k): walk n upward so sources already hold the quotient.
  void divide(int e, int k) {
    for (int n = k; n <= order_; ++n)
      for (int d = e; d < width_; ++d) at(n, d) += at(n - k, d - e);
  }

  // Betti numbers: b_d = (-1)^d · (signed coefficient).
  PoincareTable betti_table() {
    PoincareTable table;
    for (int n = 0; n <= order_; ++n) {
      std::vector<BigInt> b(static_cast<std::size_t>(width_));
      for (int d = 0; d < width_; ++d) b[static_cast<std::size_t>(d)] = (d % 2) ? BigInt(-at(n, d)) : at(n, d);
      table.emplace_back(std::move(b));
    }
    return table;
  }

 private:
  int order_;
  int width_;
  std::vector<BigInt> cells_;
};

void apply_factor(Grid& g, int z_exp, int t_exp, int i, int b) {
  // exponent (-1)^{i+1} b_i: odd i multiplies, even i divides.
  for (int r = 0; r < b; ++r) {
    if (i % 2) g.multiply(z_exp, t_exp);
    else g.divide(z_exp, t_exp);
  }
}

}  // namespace

PoincareTable hilbert_poincare(const SurfaceTopology& s, int order) {
  validate_topology(s);
  if (order < 0) throw PreconditionError("hilbert_poincare: order must be non-negative");
  Grid g(order, 4 * order);
  for (int k = 1; k <= order; ++k)
    for (int i = 0; i <= 4; ++i) apply_factor(g, 2 * k - 2 + i, k, i, s.betti[static_cast<std::size_t>(i)]);
  return g.betti_table();
}

PoincareTable symmetric_power_poincare(const SurfaceTopology& s, int order) {
  validate_topology(s);
  if (order < 0) throw PreconditionError("symmetric_power_poincare: order must be non-negative");
  Grid g(order, 4 * order);
  if (order >= 1)
    for (int i = 0; i <= 4; ++i) apply_factor(g, i, 1, i, s.betti[static_cast<std::size_t>(i)]);
  return g.betti_table();
}

PoincarePolynomial hilbert_poincare_via_strata(const SurfaceTopology& s, int n) {
  if (n < 0) throw PreconditionError("hilbert_poincare_via_strata: n must be non-negative");
  PoincareTable sym = symmetric_power_poincare(s, n);
  PoincarePolynomial total;
  for (const auto& alpha : partitions_of(n)) {
    PoincarePolynomial term = PoincarePolynomial::one();
    auto mult = alpha.multiplicities();
    for (int i = 1; i <= n; ++i) term = term * sym[static_cast<std::size_t>(mult[static_cast<std::size_t>(i)])];
    total += term.shifted(2 * age(alpha));
  }
  return total;
}

Series hilbert_euler_series(int euler, int order) { return eta_power(-euler, order).series; }

}  // namespace hilbgen
