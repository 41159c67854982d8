#include "hilbgen/walls.hpp"

#include "hilbgen/error.hpp"
#include "hilbgen/frobenius.hpp"
#include "hilbgen/series_json.hpp"

namespace hilbgen {

Lattice::Lattice(std::vector<std::vector<BigInt>> gram) : gram_(std::move(gram)) {
  const std::size_t r = gram_.size();
  if (r == 0) throw PreconditionError("lattice: empty Gram matrix");
  std::vector<Rational> flat;
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i].size() != r) throw PreconditionError("lattice: Gram matrix is not square");
    for (std::size_t j = 0; j < r; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw PreconditionError("lattice: Gram matrix is not symmetric");
      flat.emplace_back(gram_[i][j]);
    }
  }
  if (determinant(flat, r).is_zero()) throw PreconditionError("lattice: Gram matrix is degenerate");
}

Lattice Lattice::diagonal(const std::vector<long>& entries) {
  std::vector<std::vector<BigInt>> g(entries.size(), std::vector<BigInt>(entries.size(), BigInt(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return Lattice(std::move(g));
}

BigInt Lattice::dot(const LatticeVector& a, const LatticeVector& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw PreconditionError("lattice: vector length does not match rank " + std::to_string(rank()));
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

bool is_wall_class(const Lattice& l, const LatticeVector& xi, const LatticeVector& c1, const BigInt& c2) {
  if (xi.size() != l.rank() || c1.size() != l.rank())
    throw PreconditionError("is_wall_class: vector length does not match rank " + std::to_string(l.rank()));
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (mpz_odd_p(BigInt(xi[i] + c1[i]).get_mpz_t())) return false;
  BigInt x2 = l.square(xi);
  return l.square(c1) - 4 * c2 <= x2 && x2 < 0;
}

bool separates(const Lattice& l, const LatticeVector& xi, const LatticeVector& h, const LatticeVector& line) {
  return l.dot(h, xi) < 0 && l.dot(line, xi) > 0;
}

std::vector<LatticeVector> enumerate_wall_classes(const Lattice& l, const LatticeVector& c1, const BigInt& c2, long lo,
                                                  long hi) {
  if (lo > hi) throw PreconditionError("enumerate_wall_classes: empty box");
  if (c1.size() != l.rank()) throw PreconditionError("enumerate_wall_classes: c1 length does not match rank");
  std::vector<LatticeVector> out;
  LatticeVector xi(l.rank(), BigInt(lo));
  while (true) {
    if (is_wall_class(l, xi, c1, c2)) out.push_back(xi);
    std::size_t i = xi.size();
    while (i > 0 && xi[i - 1] == hi) xi[--i] = lo;
    if (i == 0) break;
    ++xi[i - 1];
  }
  return out;
}

LatticeVector lattice_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("lattice vector must be a JSON array");
  LatticeVector v;
  for (const auto& e : j) {
    if (e.is_number_integer())
      v.emplace_back(e.get<long>());
    else if (e.is_string())
      v.emplace_back(e.get<std::string>());
    else
      throw PreconditionError("lattice vector entries must be integers");
  }
  return v;
}

nlohmann::json lattice_vector_json(const LatticeVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(integer_json(x));
  return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("Gram matrix must be a JSON array of rows");
  std::vector<std::vector<BigInt>> g;
  for (const auto& row : j) g.push_back(lattice_vector_from_json(row));
  return Lattice(std::move(g));
}

}  // namespace hilbgen
