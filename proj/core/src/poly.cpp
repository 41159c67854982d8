#include "hilbgen/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hilbgen/error.hpp"

namespace hilbgen {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

}  // namespace

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponent exps, const Rational& c) {
  Poly p(std::move(vars));
  if (exps.size() != p.nvars()) throw PreconditionError("exponent length does not match variable count");
  p.add_term(exps, c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, const std::string& name) {
  Poly p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t Poly::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw PreconditionError("unknown variable '" + var + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

Poly Poly::truncated(std::size_t var, int max_exp) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_)
    if (e[var] <= max_exp) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw PreconditionError("evaluation point has wrong dimension");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= pow(point[i], e[i]);
    total += t;
  }
  return total;
}

void Poly::require_same_kind(const Poly& other) const {
  if (vars_ != other.vars_)
    throw KindError("polynomial kinds differ: [" + join(vars_) + "] vs [" + join(other.vars_) + "]");
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_kind(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_kind(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_kind(b);
  Poly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  Poly::Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coeff = c;
    if (!first) os << (coeff.sign() < 0 ? " - " : " + ");
    else if (coeff.sign() < 0) os << "-";
    if (coeff.sign() < 0) coeff = -coeff;
    bool is_unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (!coeff.is_one() || is_unit_monomial) os << coeff;
    bool need_star = !coeff.is_one();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << vars_[i];
      if (e[i] != 1) os << '^' << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hilbgen
