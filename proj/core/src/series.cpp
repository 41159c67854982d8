#include "hilbgen/series.hpp"

namespace hilbgen {

Series ps_revert(const Series& f) {
  int n = f.order();
  if (n < 1 || !f[0].is_zero() || f[1].is_zero())
    throw PreconditionError("ps_revert requires f(0) = 0 and an invertible linear coefficient");
  // h = f/q to order n-1, then (q/f)^k = h^{-k}.
  Series h_inv = ps_inverse(ps_shift_down(f, 1));
  Series result(n);
  Series power = Series::one(n - 1);
  for (int k = 1; k <= n; ++k) {
    power = ps_mul(power, h_inv);
    result.set(k, power[k - 1] * Rational(1, k));
  }
  return result;
}

PolySeries promote(const Series& s, const std::vector<std::string>& vars) {
  PolySeries r(s.order(), Poly(vars));
  for (int i = 0; i <= s.order(); ++i)
    if (!s[i].is_zero()) r.set(i, Poly::constant(vars, s[i]));
  return r;
}

Series evaluate(const PolySeries& s, std::span<const Rational> point) {
  Series r(s.order());
  for (int i = 0; i <= s.order(); ++i) r.set(i, s[i].evaluate(point));
  return r;
}

}  // namespace hilbgen
