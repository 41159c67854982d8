#include "hilbgen/dmvv.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace hilbgen {

namespace {

const std::vector<std::string> kVars{"q", "y"};

// Coefficient of p^n in F times (1 - x)^{±1} with x = p^n q^m y^l, q-truncated.
void multiply_factor(std::vector<Poly>& f, int n, const Poly& x, int q_order, bool divide) {
  const int order = static_cast<int>(f.size()) - 1;
  if (divide) {
    for (int i = n; i <= order; ++i) f[static_cast<std::size_t>(i)] += (x * f[static_cast<std::size_t>(i - n)]).truncated(0, q_order);
  } else {
    for (int i = order; i >= n; --i) f[static_cast<std::size_t>(i)] -= (x * f[static_cast<std::size_t>(i - n)]).truncated(0, q_order);
  }
}

}  // namespace

BigInt DmvvTable::at(int m, int l) const {
  auto it = c.find({m, l});
  return it == c.end() ? BigInt(0) : it->second;
}

void DmvvTable::set(int m, int l, const BigInt& v) {
  if (v == 0) c.erase({m, l});
  else c[{m, l}] = v;
}

bool DmvvTable::same_entries(const DmvvTable& other) const {
  auto nonzero = [](const DmvvTable& t) {
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [k, v] : t.c)
      if (v != 0) out.emplace(k, v);
    return out;
  };
  return nonzero(*this) == nonzero(other);
}

DmvvTable parse_dmvv_table(std::istream& in) {
  DmvvTable t;
  bool explicit_window = false;
  bool any = false;
  int m_max = 0, l_min = std::numeric_limits<int>::max(), l_max = std::numeric_limits<int>::min();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string word;
      if (ls >> word && word == "window") {
        if (!(ls >> t.m_max >> t.l_min >> t.l_max)) throw PreconditionError("malformed window line " + std::to_string(lineno));
        explicit_window = true;
      }
      continue;
    }
    int m = 0, l = 0;
    std::string cstr;
    try {
      m = std::stoi(first);
    } catch (const std::exception&) {
      throw PreconditionError("malformed DMVV table line " + std::to_string(lineno));
    }
    if (!(ls >> l >> cstr) || m < 0) throw PreconditionError("malformed DMVV table line " + std::to_string(lineno));
    BigInt v;
    if (v.set_str(cstr, 10) != 0) throw PreconditionError("non-integer DMVV coefficient on line " + std::to_string(lineno));
    t.set(m, l, t.at(m, l) + v);
    any = true;
    m_max = std::max(m_max, m);
    l_min = std::min(l_min, l);
    l_max = std::max(l_max, l);
  }
  if (!explicit_window) {
    t.m_max = m_max;
    t.l_min = any ? l_min : 0;
    t.l_max = any ? l_max : 0;
  }
  for (const auto& [k, v] : t.c)
    if (k.first > t.m_max || k.second < t.l_min || k.second > t.l_max)
      throw PreconditionError("DMVV entry outside the declared window");
  return t;
}

std::string format_dmvv_table(const DmvvTable& t) {
  std::ostringstream os;
  os << "# window " << t.m_max << ' ' << t.l_min << ' ' << t.l_max << '\n';
  for (const auto& [k, v] : t.c)
    if (v != 0) os << k.first << ' ' << k.second << ' ' << v.get_str() << '\n';
  return os.str();
}

PolySeries dmvv_product(const DmvvTable& table, int p_order, int q_order) {
  if (p_order < 0 || q_order < 0) throw PreconditionError("dmvv_product: orders must be non-negative");
  std::vector<Poly> f(static_cast<std::size_t>(p_order) + 1, Poly(kVars));
  f[0] = Poly::constant(kVars, 1);
  for (int n = 1; n <= p_order; ++n) {
    for (int m = 0; m <= q_order; ++m) {
      if (n * m > table.m_max)
        throw PreconditionError("DMVV window insufficient: factor (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                ") needs c(" + std::to_string(n * m) + ",l) but the table stops at m=" +
                                std::to_string(table.m_max));
      for (int l = table.l_min; l <= table.l_max; ++l) {
        BigInt c = table.at(n * m, l);
        if (c == 0) continue;
        Poly x = Poly::monomial(kVars, {m, l});
        bool divide = c > 0;
        BigInt reps = divide ? c : BigInt(-c);
        for (BigInt r = 0; r < reps; ++r) multiply_factor(f, n, x, q_order, divide);
      }
    }
  }
  return PolySeries(std::move(f), p_order, Poly(kVars));
}

DmvvTable dmvv_invert(const PolySeries& F, int q_order) {
  if (F.proto().vars() != kVars) throw KindError("dmvv_invert expects coefficients in (q, y)");
  const int p_order = F.order();
  PolySeries logF = ps_log(F);  // requires constant term 1

  // a(n,m,l): exponent of (1 - p^n q^m y^l)^{-1}. [p^N q^M y^L] log F = Σ_{k | (N,M,L)} a(N/k,M/k,L/k)/k.
  std::map<std::tuple<int, int, int>, Rational> a;
  std::set<int> l_values;
  for (int N = 1; N <= p_order; ++N)
    for (const auto& [e, coeff] : logF[N].terms()) {
      if (e[0] < 0 || e[0] > q_order) continue;
      l_values.insert(e[1]);
    }

  DmvvTable out;
  std::map<std::pair<int, int>, std::pair<Rational, std::string>> seen;  // (nm,l) -> value, where
  // Peeling can create exponents at y^L with no log term there, but only at L = k·L' for observed L'.
  const int observed_lo = l_values.empty() ? 0 : *l_values.begin();
  const int observed_hi = l_values.empty() ? 0 : *l_values.rbegin();
  const int l_lo = std::min(observed_lo, observed_lo * p_order);
  const int l_hi = std::max(observed_hi, observed_hi * p_order);
  out.m_max = p_order * q_order;

  for (int N = 1; N <= p_order; ++N) {
    for (int M = 0; M <= q_order; ++M) {
      for (int L = l_lo; L <= l_hi; ++L) {
        Rational value = logF[N].coefficient({M, L});
        int g = std::gcd(std::gcd(N, M), std::abs(L));
        for (int k = 2; k <= g; ++k) {
          if (N % k || M % k || L % k) continue;
          auto it = a.find({N / k, M / k, L / k});
          if (it != a.end()) value -= it->second * Rational(1, k);
        }
        if (!value.is_integer())
          throw ComputationError("non-integer exponent " + value.to_string() + " at p^" + std::to_string(N) + " q^" +
                                 std::to_string(M) + " y^" + std::to_string(L) + ": input is not of product form");
        if (!value.is_zero()) a[{N, M, L}] = value;
        std::string where = "(n=" + std::to_string(N) + ",m=" + std::to_string(M) + ")";
        auto [it, inserted] = seen.try_emplace({N * M, L}, value, where);
        if (!inserted && it->second.first != value)
          throw ComputationError("factors " + it->second.second + " and " + where + " share c(" + std::to_string(N * M) +
                                 "," + std::to_string(L) + ") but need exponents " + it->second.first.to_string() +
                                 " and " + value.to_string() + ": input is not of product form");
      }
    }
  }
  for (const auto& [key, v] : seen) out.set(key.first, key.second, v.first.to_integer());
  if (!out.c.empty()) {
    out.l_min = std::numeric_limits<int>::max();
    out.l_max = std::numeric_limits<int>::min();
    for (const auto& [key, v] : out.c) {
      out.l_min = std::min(out.l_min, key.second);
      out.l_max = std::max(out.l_max, key.second);
    }
  }
  return out;
}

}  // namespace hilbgen
