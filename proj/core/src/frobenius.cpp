#include "hilbgen/frobenius.hpp"

#include <sstream>

#include "hilbgen/error.hpp"
#include "hilbgen/surface.hpp"

namespace hilbgen {

FrobeniusModel::FrobeniusModel(std::vector<int> degrees, std::size_t unit, const std::vector<Product>& products,
                               Element integral, Element euler_class, std::vector<std::string> labels,
                               Element canonical_class)
    : degrees_(std::move(degrees)),
      unit_(unit),
      integral_(std::move(integral)),
      euler_(std::move(euler_class)),
      canonical_(std::move(canonical_class)),
      labels_(std::move(labels)) {
  const std::size_t n = dim();
  if (n == 0) throw PreconditionError("Frobenius model needs a non-empty basis");
  if (unit_ >= n) throw PreconditionError("unit index out of range");
  if (integral_.size() != n || euler_.size() != n)
    throw PreconditionError("integral and Euler class must have one entry per basis element");
  if (canonical_.empty()) canonical_.assign(n, Rational(0));
  if (canonical_.size() != n) throw PreconditionError("canonical class has wrong length");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != n) throw PreconditionError("label count does not match basis");

  table_.assign(n * n * n, Rational(0));
  for (const auto& p : products) {
    if (p.i >= n || p.j >= n || p.k >= n) throw PreconditionError("structure constant index out of range");
    table_[(p.i * n + p.j) * n + p.k] += p.c;
  }
  sparse_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!structure(i, j, k).is_zero()) sparse_[i * n + j].emplace_back(k, structure(i, j, k));

  pairing_.assign(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : product_terms(i, j)) pairing_[i * n + j] += c * integral_[k];
}

FrobeniusModel::Element FrobeniusModel::basis_element(std::size_t i) const {
  Element e(dim());
  e[i] = 1;
  return e;
}

FrobeniusModel::Element FrobeniusModel::multiply(const Element& a, const Element& b) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Rational ab = a[i] * b[j];
      for (const auto& [k, c] : product_terms(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Rational FrobeniusModel::integrate(const Element& a) const {
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) s += a[i] * integral_[i];
  return s;
}

std::vector<int> FrobeniusModel::degree_counts() const {
  std::vector<int> counts(5, 0);
  for (int d : degrees_)
    if (d >= 0 && d <= 4) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

Rational FrobeniusModel::pairing_determinant() const { return determinant(pairing_, dim()); }

std::vector<FrobeniusModel::Element> FrobeniusModel::dual_basis() const {
  const std::size_t n = dim();
  // e^j = Σ_k X_{jk} e_k with Σ_k P_{ik} X_{jk} = δ_ij, i.e. X = (P^{-1})^T.
  auto inv = inverse_matrix(pairing_, n);
  std::vector<Element> dual(n, Element(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) dual[j][k] = inv[k * n + j];
  return dual;
}

Rational determinant(std::vector<Rational> a, std::size_t n) {
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    const Rational p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col].is_zero()) continue;
      Rational f = a[r * n + col] / p;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

std::vector<Rational> inverse_matrix(std::vector<Rational> a, std::size_t n) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) throw ComputationError("matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[pivot * n + c], a[col * n + c]);
        std::swap(inv[pivot * n + c], inv[col * n + c]);
      }
    const Rational p = a[col * n + col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col * n + c] *= p;
      inv[col * n + c] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      Rational f = a[r * n + col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

namespace {

class Collector {
 public:
  explicit Collector(FrobeniusReport& r) : report_(r) {}
  void fail(std::string check, std::vector<std::size_t> witness, std::string detail) {
    report_.passed = false;
    // One witness per check keeps reports short for badly broken tables.
    for (const auto& f : report_.failures)
      if (f.check == check) return;
    report_.failures.push_back({std::move(check), std::move(witness), std::move(detail)});
  }

 private:
  FrobeniusReport& report_;
};

bool koszul_negative(const FrobeniusModel& m, std::size_t i, std::size_t j) { return m.is_odd(i) && m.is_odd(j); }

}  // namespace

FrobeniusReport validate_frobenius(const FrobeniusModel& m, const SurfaceTopology* topology) {
  FrobeniusReport report;
  Collector out(report);
  const std::size_t n = m.dim();

  for (std::size_t i = 0; i < n; ++i)
    if (m.degree(i) < 0 || m.degree(i) > 4) out.fail("degree-range", {i}, "basis degree outside 0..4");

  const std::size_t u = m.unit_index();
  if (m.degree(u) != 0) out.fail("unit-degree", {u}, "unit is not in degree 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (m.multiply(m.unit(), m.basis_element(i)) != m.basis_element(i) ||
        m.multiply(m.basis_element(i), m.unit()) != m.basis_element(i))
      out.fail("unit-law", {i}, "1·e != e or e·1 != e");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : m.product_terms(i, j))
        if (m.degree(k) != m.degree(i) + m.degree(j)) out.fail("grading", {i, j, k}, "product leaves its degree");
      for (std::size_t k = 0; k < n; ++k) {
        Rational swapped = m.structure(j, i, k);
        if (koszul_negative(m, i, j)) swapped = -swapped;
        if (m.structure(i, j, k) != swapped)
          out.fail("graded-commutativity", {i, j, k}, "e_i e_j != (-1)^{|i||j|} e_j e_i");
      }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto ei = m.basis_element(i), ej = m.basis_element(j), ek = m.basis_element(k);
        auto left = m.multiply(m.multiply(ei, ej), ek);
        auto right = m.multiply(ei, m.multiply(ej, ek));
        if (left != right) out.fail("associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)");
        if (m.integrate(left) != m.integrate(right))
          out.fail("frobenius", {i, j, k}, "∫(e_i e_j) e_k != ∫ e_i (e_j e_k)");
      }

  for (std::size_t i = 0; i < n; ++i)
    if (!m.integral_values()[i].is_zero() && m.degree(i) != 4)
      out.fail("integral-support", {i}, "integral is nonzero outside degree 4");

  if (m.pairing_determinant().is_zero()) out.fail("nondegeneracy", {}, "pairing matrix is singular");

  for (std::size_t i = 0; i < n; ++i)
    if (!m.euler_class()[i].is_zero() && m.degree(i) != 4)
      out.fail("euler-class-degree", {i}, "Euler class has a component outside degree 4");

  if (topology != nullptr) {
    Rational e = m.integrate(m.euler_class());
    if (e != Rational(euler_number(*topology))) {
      std::ostringstream os;
      os << "∫ euler_class = " << e << " but e(S) = " << euler_number(*topology);
      out.fail("euler-number", {}, os.str());
    }
    auto counts = m.degree_counts();
    for (std::size_t d = 0; d < 5; ++d)
      if (counts[d] != topology->betti[d])
        out.fail("betti-counts", {d}, "basis size in degree " + std::to_string(d) + " differs from b_" + std::to_string(d));
  }
  return report;
}

}  // namespace hilbgen
