#include "hilbgen/eta.hpp"

#include <cstdlib>

namespace hilbgen {

namespace {

// In-place multiply by (1 - q^k), or divide by it (a geometric prefix sum).
void mul_one_minus(std::vector<BigInt>& c, int k) {
  for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(k);) c[i] -= c[i - k];
}

void div_one_minus(std::vector<BigInt>& c, int k) {
  for (std::size_t i = static_cast<std::size_t>(k); i < c.size(); ++i) c[i] += c[i - k];
}

}  // namespace

EtaPower eta_power(int m, int order) {
  if (order < 0) throw PreconditionError("eta_power: order must be non-negative");
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
  c[0] = 1;
  int reps = std::abs(m);
  for (int k = 1; k <= order; ++k) {
    for (int r = 0; r < reps; ++r) {
      if (m > 0) mul_one_minus(c, k);
      else div_one_minus(c, k);
    }
  }
  std::vector<Rational> coeffs(c.begin(), c.end());
  return EtaPower{m, Series(std::move(coeffs), order), Rational(m, 24)};
}

Series discriminant(int order) {
  Series out(order);
  if (order == 0) return out;
  Series e = eta_power(24, order - 1).series;
  for (int i = 1; i <= order; ++i) out.set(i, e[i - 1]);
  return out;
}

}  // namespace hilbgen
