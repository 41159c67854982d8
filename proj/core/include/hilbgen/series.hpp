#pragma once

// Truncated formal power series in one variable with exact coefficients.
//
// A series carries an explicit truncation order N: coefficients of q^0..q^N are
// known exactly, everything above is unknown. Binary operations truncate to the
// smaller order of their operands and never extend a result silently.
//
// The coefficient type is either Rational or Poly (Laurent polynomial in named
// auxiliary variables). Rational -> Poly promotion is explicit (promote()).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbgen/error.hpp"
#include "hilbgen/poly.hpp"
#include "hilbgen/rational.hpp"

namespace hilbgen {

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static bool is_one(const Rational& c) { return c.is_one(); }
  static void check_same_kind(const Rational&, const Rational&) {}
  static Rational invert(const Rational& c) {
    if (c.is_zero()) throw PreconditionError("constant term is not invertible");
    return c.inverse();
  }
  static std::string kind(const Rational&) { return "rational"; }
};

template <>
struct coeff_traits<Poly> {
  static Poly zero_like(const Poly& p) { return Poly(p.vars()); }
  static Poly one_like(const Poly& p) { return Poly::constant(p.vars(), 1); }
  static bool is_zero(const Poly& c) { return c.is_zero(); }
  static bool is_one(const Poly& c) { return c.is_constant() && c.constant_term().is_one(); }
  static void check_same_kind(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw KindError("series coefficient kinds differ");
  }
  static Poly invert(const Poly& c) {
    if (!c.is_constant() || c.is_zero())
      throw PreconditionError("constant term is not an invertible constant");
    return Poly::constant(c.vars(), c.constant_term().inverse());
  }
  static std::string kind(const Poly& p) {
    std::string s = "poly[";
    for (std::size_t i = 0; i < p.vars().size(); ++i) s += (i ? "," : "") + p.vars()[i];
    return s + "]";
  }
};

template <class C>
class PowerSeries {
 public:
  using coeff_type = C;
  using traits = coeff_traits<C>;

  /// Zero series of the given order; `proto` fixes the coefficient kind.
  explicit PowerSeries(int order = 0, C proto = C{}) : proto_(traits::zero_like(proto)) {
    if (order < 0) throw PreconditionError("truncation order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, proto_);
  }

  /// Coefficients beyond `order` are dropped; missing ones are zero.
  PowerSeries(std::vector<C> coeffs, int order, C proto = C{}) : PowerSeries(order, std::move(proto)) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) set(static_cast<int>(i), std::move(coeffs[i]));
  }

  static PowerSeries one(int order, C proto = C{}) {
    PowerSeries s(order, proto);
    s.coeffs_[0] = traits::one_like(proto);
    return s;
  }

  /// c·q^k truncated at `order`.
  static PowerSeries monomial(int k, const C& c, int order) {
    PowerSeries s(order, c);
    if (k <= order) s.set(k, c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& proto() const { return proto_; }
  std::string kind() const { return traits::kind(proto_); }

  const C& operator[](int n) const {
    if (n < 0 || n > order()) throw PreconditionError("coefficient index outside truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
  }
  void set(int n, C value) {
    if (n < 0 || n > order()) throw PreconditionError("coefficient index outside truncation order");
    traits::check_same_kind(proto_, value);
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
  }
  const std::vector<C>& coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 when all known coefficients vanish.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!traits::is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
    return order() + 1;
  }

  PowerSeries truncated(int n) const {
    if (n > order()) throw PreconditionError("cannot extend a series beyond its truncation order");
    PowerSeries r(n, proto_);
    for (int i = 0; i <= n; ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.proto_ == b.proto_ && a.coeffs_ == b.coeffs_;
  }

 private:
  C proto_;
  std::vector<C> coeffs_;
};

using Series = PowerSeries<Rational>;
using PolySeries = PowerSeries<Poly>;

/// Rational series from a list of coefficients.
inline Series make_series(std::initializer_list<Rational> coeffs, int order) {
  return Series(std::vector<Rational>(coeffs), order);
}

namespace detail {

template <class C>
void check_kinds(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  coeff_traits<C>::check_same_kind(a.proto(), b.proto());
}

}  // namespace detail

template <class C>
PowerSeries<C> ps_add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  detail::check_kinds(a, b);
  int n = std::min(a.order(), b.order());
  PowerSeries<C> r(n, a.proto());
  for (int i = 0; i <= n; ++i) r.set(i, a[i] + b[i]);
  return r;
}

template <class C>
PowerSeries<C> ps_sub(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  detail::check_kinds(a, b);
  int n = std::min(a.order(), b.order());
  PowerSeries<C> r(n, a.proto());
  for (int i = 0; i <= n; ++i) r.set(i, a[i] - b[i]);
  return r;
}

template <class C>
PowerSeries<C> ps_scale(const PowerSeries<C>& a, const Rational& s) {
  PowerSeries<C> r(a.order(), a.proto());
  for (int i = 0; i <= a.order(); ++i) r.set(i, a[i] * s);
  return r;
}

template <class C>
PowerSeries<C> ps_neg(const PowerSeries<C>& a) {
  return ps_scale(a, Rational(-1));
}

/// Cauchy product truncated at the smaller order.
template <class C>
PowerSeries<C> ps_mul(const PowerSeries<C>& a, const PowerSeries<C>& b) {
  detail::check_kinds(a, b);
  using T = coeff_traits<C>;
  int n = std::min(a.order(), b.order());
  std::vector<C> acc(static_cast<std::size_t>(n) + 1, a.proto());
  for (int i = 0; i <= n; ++i) {
    if (T::is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (T::is_zero(b[j])) continue;
      acc[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return PowerSeries<C>(std::move(acc), n, a.proto());
}

/// Product of a series with any coefficient kind by a rational series.
template <class C>
PowerSeries<C> ps_mul_rational(const PowerSeries<C>& a, const Series& b) {
  using T = coeff_traits<C>;
  int n = std::min(a.order(), b.order());
  std::vector<C> acc(static_cast<std::size_t>(n) + 1, a.proto());
  for (int i = 0; i <= n; ++i) {
    if (T::is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      acc[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return PowerSeries<C>(std::move(acc), n, a.proto());
}

/// Multiplicative inverse; requires an invertible constant term.
template <class C>
PowerSeries<C> ps_inverse(const PowerSeries<C>& a) {
  using T = coeff_traits<C>;
  int n = a.order();
  C inv0 = T::invert(a[0]);
  std::vector<C> b(static_cast<std::size_t>(n) + 1, a.proto());
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    C acc = a.proto();
    for (int j = 1; j <= k; ++j) {
      if (T::is_zero(a[j])) continue;
      acc += a[j] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -(inv0 * acc);
  }
  return PowerSeries<C>(std::move(b), n, a.proto());
}

/// a^k; negative k inverts first and needs an invertible constant term.
template <class C>
PowerSeries<C> ps_pow(const PowerSeries<C>& a, long k) {
  if (k < 0) return ps_pow(ps_inverse(a), -k);
  PowerSeries<C> result = PowerSeries<C>::one(a.order(), a.proto());
  PowerSeries<C> base = a;
  while (k > 0) {
    if (k & 1) result = ps_mul(result, base);
    k >>= 1;
    if (k) base = ps_mul(base, base);
  }
  return result;
}

/// exp(a) for a(0) = 0, via n·b_n = Σ_{k=1..n} k·a_k·b_{n-k}.
template <class C>
PowerSeries<C> ps_exp(const PowerSeries<C>& a) {
  using T = coeff_traits<C>;
  if (!T::is_zero(a[0])) throw PreconditionError("ps_exp requires a zero constant term");
  int n = a.order();
  std::vector<C> b(static_cast<std::size_t>(n) + 1, a.proto());
  b[0] = T::one_like(a.proto());
  for (int m = 1; m <= n; ++m) {
    C acc = a.proto();
    for (int k = 1; k <= m; ++k) {
      if (T::is_zero(a[k])) continue;
      acc += (a[k] * b[static_cast<std::size_t>(m - k)]) * Rational(k);
    }
    b[static_cast<std::size_t>(m)] = acc * Rational(1, m);
  }
  return PowerSeries<C>(std::move(b), n, a.proto());
}

/// log(a) for a(0) = 1, via n·c_n = n·a_n - Σ_{k=1..n-1} k·c_k·a_{n-k}.
template <class C>
PowerSeries<C> ps_log(const PowerSeries<C>& a) {
  using T = coeff_traits<C>;
  if (!T::is_one(a[0])) throw PreconditionError("ps_log requires constant term 1");
  int n = a.order();
  std::vector<C> c(static_cast<std::size_t>(n) + 1, a.proto());
  for (int m = 1; m <= n; ++m) {
    C acc = a[m] * Rational(m);
    for (int k = 1; k < m; ++k) {
      if (T::is_zero(a[m - k])) continue;
      acc -= (c[static_cast<std::size_t>(k)] * a[m - k]) * Rational(k);
    }
    c[static_cast<std::size_t>(m)] = acc * Rational(1, m);
  }
  return PowerSeries<C>(std::move(c), n, a.proto());
}

/// f(g(q)) for g(0) = 0, by Horner's scheme; order is min(order f, order g).
template <class C>
PowerSeries<C> ps_compose(const PowerSeries<C>& f, const Series& g) {
  if (!g[0].is_zero()) throw PreconditionError("ps_compose requires g(0) = 0");
  int n = std::min(f.order(), g.order());
  Series gt = g.truncated(n);
  PowerSeries<C> r = PowerSeries<C>::monomial(0, f[n], n);
  for (int i = n - 1; i >= 0; --i) {
    r = ps_mul_rational(r, gt);
    r.set(0, r[0] + f[i]);
  }
  return r;
}

/// Compositional inverse of f with f(0) = 0 and f'(0) != 0, via Lagrange
/// inversion: [q^n] f^{-1} = (1/n)·[q^{n-1}] (q/f)^n.
Series ps_revert(const Series& f);

/// D = q d/dq.
template <class C>
PowerSeries<C> ps_D(const PowerSeries<C>& a) {
  PowerSeries<C> r(a.order(), a.proto());
  for (int i = 1; i <= a.order(); ++i) r.set(i, a[i] * Rational(i));
  return r;
}

/// Promotes a rational series to a polynomial-coefficient series over `vars`.
PolySeries promote(const Series& s, const std::vector<std::string>& vars);

/// Coefficientwise evaluation of a polynomial-coefficient series at a point.
Series evaluate(const PolySeries& s, std::span<const Rational> point);

/// Divides by q^k; the first k coefficients must vanish. Order drops by k.
template <class C>
PowerSeries<C> ps_shift_down(const PowerSeries<C>& a, int k) {
  if (k > a.order()) throw PreconditionError("shift exceeds truncation order");
  for (int i = 0; i < k; ++i)
    if (!coeff_traits<C>::is_zero(a[i])) throw PreconditionError("series is not divisible by q^k");
  PowerSeries<C> r(a.order() - k, a.proto());
  for (int i = 0; i <= r.order(); ++i) r.set(i, a[i + k]);
  return r;
}

template <class C>
PowerSeries<C> operator+(const PowerSeries<C>& a, const PowerSeries<C>& b) { return ps_add(a, b); }
template <class C>
PowerSeries<C> operator-(const PowerSeries<C>& a, const PowerSeries<C>& b) { return ps_sub(a, b); }
template <class C>
PowerSeries<C> operator*(const PowerSeries<C>& a, const PowerSeries<C>& b) { return ps_mul(a, b); }

}  // namespace hilbgen
