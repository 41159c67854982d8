#include "hilbgen/fock.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hilbgen/series_json.hpp"

namespace hilbgen {

FockState FockState::basis(Monomial m, Rational c) {
  FockState s;
  s.add(m, c);
  return s;
}

namespace {

bool term_less(const FockState::Term& t, const Monomial& m) { return t.first < m; }

}  // namespace

Rational FockState::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_less);
  return it == terms_.end() || it->first != m ? Rational(0) : it->second;
}

void FockState::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.begin();
  if (!terms_.empty() && terms_.back().first < m)
    it = terms_.end();
  else
    it = std::lower_bound(terms_.begin(), terms_.end(), m, term_less);
  if (it == terms_.end() || it->first != m) {
    terms_.emplace(it, m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockState& FockState::operator+=(const FockState& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

FockSpace::FockSpace(FrobeniusModel model, AdjointConvention convention)
    : model_(std::move(model)), convention_(convention) {
  const std::size_t n = model_.dim();
  pairs_with_.resize(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (!model_.pairing(c, i).is_zero()) pairs_with_[c].emplace_back(i, model_.pairing(c, i));
  if (!model_.pairing_determinant().is_zero())
    for (std::size_t c = 0; c < n; ++c) pushforward_.push_back(diagonal_pushforward(model_, model_.basis_element(c)));
}

const std::vector<TensorTerm>& FockSpace::basis_pushforward(std::size_t cls) const {
  if (pushforward_.empty()) throw ComputationError("diagonal pushforward: the pairing is singular");
  return pushforward_.at(cls);
}

int FockSpace::weight(const Monomial& m) const {
  int w = 0;
  for (auto g : m) w += generator_level(g);
  return w;
}

int FockSpace::degree(const Monomial& m) const {
  int d = 0;
  for (auto g : m) d += model_.degree(generator_class(g)) + 2 * (generator_level(g) - 1);
  return d;
}

bool FockSpace::is_odd(const Monomial& m) const {
  bool odd = false;
  for (auto g : m) odd ^= generator_odd(g);
  return odd;
}

void FockSpace::apply_basis_op(int level, std::size_t cls, const Monomial& m, const Rational& c, FockState& out) const {
  if (level == 0 || c.is_zero()) return;
  if (level < 0) {
    const GeneratorKey g = make_generator(-level, cls);
    const bool odd = generator_odd(g);
    auto pos = std::lower_bound(m.begin(), m.end(), g);
    if (odd && pos != m.end() && *pos == g) return;  // a² = 0 for odd a
    bool negative = false;
    if (odd)
      for (auto it = m.begin(); it != pos; ++it) negative ^= generator_odd(*it);
    Monomial r;
    r.reserve(m.size() + 1);
    r.insert(r.end(), m.begin(), pos);
    r.push_back(g);
    r.insert(r.end(), pos, m.end());
    out.add(r, negative ? -c : c);
    return;
  }
  // (-1)^{n-1} n, or (-1)^n n under the flipped convention.
  const bool flip = convention_ == AdjointConvention::Flipped;
  Rational factor = ((level - 1) % 2 == 0) != flip ? Rational(level) : Rational(-level);
  for (const auto& [i, pairing] : pairs_with_[cls]) {
    const GeneratorKey g = make_generator(level, i);
    auto first = std::lower_bound(m.begin(), m.end(), g);
    if (first == m.end() || *first != g) continue;
    auto last = std::upper_bound(first, m.end(), g);
    bool negative = false;
    if (generator_odd(g))
      for (auto it = m.begin(); it != first; ++it) negative ^= generator_odd(*it);
    Monomial r;
    r.reserve(m.size() - 1);
    r.insert(r.end(), m.begin(), first);
    r.insert(r.end(), first + 1, m.end());
    Rational coeff = c * factor * pairing * Rational(static_cast<long>(last - first));
    out.add(r, negative ? -coeff : coeff);
  }
}

FockState FockSpace::apply_basis_op(int level, std::size_t cls, const FockState& v) const {
  FockState out;
  for (const auto& [m, c] : v.terms()) apply_basis_op(level, cls, m, c, out);
  return out;
}

FockState FockSpace::apply(const HeisenbergOp& op, const FockState& v) const {
  FockState out;
  if (op.level == 0) return out;
  for (std::size_t i = 0; i < model_.dim(); ++i) {
    if (op.cls[i].is_zero()) continue;
    for (const auto& [m, c] : v.terms()) apply_basis_op(op.level, i, m, c * op.cls[i], out);
  }
  return out;
}

void FockSpace::for_each_basis_monomial(int weight, const std::function<void(const Monomial&)>& visit) const {
  const std::size_t dim = model_.dim();
  std::vector<GeneratorKey> gens;
  for (int k = 1; k <= weight; ++k)
    for (std::size_t i = 0; i < dim; ++i) gens.push_back(make_generator(k, i));
  Monomial current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    for (std::size_t gi = start; gi < gens.size(); ++gi) {
      const GeneratorKey g = gens[gi];
      const int level = generator_level(g);
      if (level > remaining) break;
      current.push_back(g);
      // odd generators appear at most once; even ones may repeat
      rec(generator_odd(g) ? gi + 1 : gi, remaining - level);
      current.pop_back();
    }
  };
  rec(0, weight);
}

std::vector<Monomial> FockSpace::basis_up_to(int max_weight) const {
  std::vector<Monomial> out;
  for (int w = 0; w <= max_weight; ++w) for_each_basis_monomial(w, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::string FockSpace::to_string(const Monomial& m) const {
  if (m.empty()) return "|0>";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i)
    os << (i ? " " : "") << "p_{-" << generator_level(m[i]) << "}(" << model_.labels()[generator_class(m[i])] << ")";
  os << "|0>";
  return os.str();
}

std::string FockSpace::to_string(const FockState& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    os << (first ? "" : " + ") << "(" << c << ") " << to_string(m);
    first = false;
  }
  return os.str();
}

nlohmann::json FockSpace::to_json(const FockState& v) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : v.terms()) terms.push_back({{"coeff", c.to_string()}, {"vector", to_string(m)}});
  return terms;
}

PoincareTable fock_graded_dimensions(const FrobeniusModel& m, int max_weight) {
  if (max_weight < 0) throw PreconditionError("fock_graded_dimensions: weight must be non-negative");
  FockSpace space(m);
  PoincareTable table;
  for (int w = 0; w <= max_weight; ++w) {
    std::vector<BigInt> counts(static_cast<std::size_t>(4 * w) + 1, BigInt(0));
    space.for_each_basis_monomial(w, [&](const Monomial& mono) {
      int d = space.degree(mono);
      if (d >= static_cast<int>(counts.size())) counts.resize(static_cast<std::size_t>(d) + 1, BigInt(0));
      ++counts[static_cast<std::size_t>(d)];
    });
    table.emplace_back(std::move(counts));
  }
  return table;
}

std::vector<TensorTerm> diagonal_pushforward(const FrobeniusModel& m, const FrobeniusModel::Element& alpha) {
  const std::size_t n = m.dim();
  auto dual = m.dual_basis();
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    auto left = m.multiply(alpha, m.basis_element(i));
    Rational sign = m.is_odd(i) ? Rational(-1) : Rational(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (left[k].is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (dual[i][l].is_zero()) continue;
        acc[{k, l}] += sign * left[k] * dual[i][l];
      }
    }
  }
  std::vector<TensorTerm> out;
  for (const auto& [kl, c] : acc)
    if (!c.is_zero()) out.push_back({kl.first, kl.second, c});
  return out;
}

FrobeniusModel::Element multiply_legs(const FrobeniusModel& m, const std::vector<TensorTerm>& t) {
  auto out = m.zero();
  for (const auto& term : t)
    for (const auto& [k, c] : m.product_terms(term.left, term.right)) out[k] += term.coeff * c;
  return out;
}

}  // namespace hilbgen
