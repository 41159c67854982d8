#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include "hilbgen/error.hpp"
#include "hilbgen/relations.hpp"

namespace hilbgen {

namespace {

int max_weight(const FockSpace& space, const FockState& v) {
  int w = 0;
  for (const auto& [m, c] : v.terms()) w = std::max(w, space.weight(m));
  return w;
}

Rational twist(int nu) { return nu > 0 || (nu % 2 != 0) ? Rational(1) : Rational(-1); }

// :p_a(e_k) p_b(e_l): applied to v, scaled by c.
void normal_ordered(const FockSpace& space, int a, std::size_t k, int b, std::size_t l, const Rational& c,
                    const FockState& v, FockState& out) {
  FockState tmp;
  if (a > 0 && b < 0) {
    // creation to the left; swapping costs the Koszul sign of the two classes
    for (const auto& [m, x] : v.terms()) space.apply_basis_op(a, k, m, x, tmp);
    Rational s = space.model().is_odd(k) && space.model().is_odd(l) ? -c : c;
    for (const auto& [m, x] : tmp.terms()) space.apply_basis_op(b, l, m, x * s, out);
  } else {
    for (const auto& [m, x] : v.terms()) space.apply_basis_op(b, l, m, x, tmp);
    for (const auto& [m, x] : tmp.terms()) space.apply_basis_op(a, k, m, x * c, out);
  }
}

struct LocalEntry {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t witness_state = 0;
  std::optional<RelationWitness> witness;

  template <class MakeWitness>
  void fail(std::size_t state_index, MakeWitness&& make) {
    ++failures;
    if (!witness) {
      witness = make();
      witness_state = state_index;
    }
  }
};

// Calls check(state, state_index, entries) for every basis state of weight ≤ bound,
// weight by weight, stopping at the deadline. `check` bumps checks and failures itself.
template <class Check>
RelationReport run_exhaustive(const FockSpace& space, RelationReport report, const CheckOptions& options,
                              const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = options.threads ? options.threads : configured_threads();
  const std::size_t n_entries = report.entries.size();
  std::vector<LocalEntry> merged(n_entries);

  std::vector<std::vector<Monomial>> by_weight(static_cast<std::size_t>(options.weight_bound) + 1);
  for (int w = 0; w <= options.weight_bound; ++w)
    space.for_each_basis_monomial(w, [&](const Monomial& m) { by_weight[static_cast<std::size_t>(w)].push_back(m); });
  report.states_total = 0;
  for (const auto& ws : by_weight) report.states_total += ws.size();

  std::atomic<bool> expired{false};
  std::size_t offset = 0;
  for (int w = 0; w <= options.weight_bound && !expired; ++w) {
    const auto& states = by_weight[static_cast<std::size_t>(w)];
    std::vector<std::vector<LocalEntry>> locals(threads, std::vector<LocalEntry>(n_entries));
    std::vector<std::size_t> done(threads, 0);
    auto worker = [&](unsigned t) {
      for (std::size_t s = t; s < states.size(); s += threads) {
        if (expired || (options.deadline && std::chrono::steady_clock::now() > *options.deadline)) {
          expired = true;
          return;
        }
        check(states[s], offset + s, locals[t]);
        ++done[t];
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    for (unsigned t = 0; t < threads; ++t) {
      report.states_checked += done[t];
      for (std::size_t e = 0; e < n_entries; ++e) {
        auto& me = merged[e];
        auto& le = locals[t][e];
        me.checks += le.checks;
        me.failures += le.failures;
        if (le.witness && (!me.witness || le.witness_state < me.witness_state)) {
          me.witness = std::move(le.witness);
          me.witness_state = le.witness_state;
        }
      }
    }
    if (!expired) report.verified_weight = w;
    offset += states.size();
  }
  report.complete = !expired;
  for (std::size_t e = 0; e < n_entries; ++e) {
    report.entries[e].checks = merged[e].checks;
    report.entries[e].failures = merged[e].failures;
    report.entries[e].witness = std::move(merged[e].witness);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

unsigned configured_threads() {
  if (const char* env = std::getenv("HILBGEN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::size_t RelationReport::failure_count() const {
  std::size_t f = 0;
  for (const auto& e : entries) f += e.failures;
  return f;
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"relation", e.relation},
                     {"parameters", {{"n", e.n}, {"m", e.m}}},
                     {"status", e.failures ? "fail" : (complete ? "ok" : "incomplete")},
                     {"checks", e.checks},
                     {"failures", e.failures}};
    if (e.witness)
      j["witness"] = {{"left_class", e.witness->left_class},
                      {"right_class", e.witness->right_class},
                      {"state", e.witness->state},
                      {"lhs", e.witness->lhs},
                      {"rhs", e.witness->rhs}};
    list.push_back(std::move(j));
  }
  return {{"relation", relation},
          {"weight_bound", weight_bound},
          {"level_bound", level_bound},
          {"complete", complete},
          {"verified_weight", verified_weight},
          {"states_checked", states_checked},
          {"states_total", states_total},
          {"passed", passed()},
          {"entries", std::move(list)}};
}

FockState apply_virasoro(const FockSpace& space, int n, const FrobeniusModel::Element& alpha, const FockState& v,
                         VirasoroConvention convention) {
  FockState out;
  if (v.is_zero()) return out;
  std::vector<TensorTerm> delta;
  for (std::size_t a = 0; a < alpha.size(); ++a) {
    if (alpha[a].is_zero()) continue;
    for (const auto& t : space.basis_pushforward(a)) delta.push_back({t.left, t.right, alpha[a] * t.coeff});
  }
  if (delta.empty()) return out;
  const int w = max_weight(space, v);
  if (convention == VirasoroConvention::AsPrinted && n == 0) {
    for (int nu = 1; nu <= w; ++nu)
      for (const auto& t : delta) normal_ordered(space, -nu, t.left, nu, t.right, t.coeff, v, out);
    return out;
  }
  // outside this range one factor annihilates with level above w before anything is created
  const int lo = std::min(n, 0) - w;
  const int hi = std::max(n, 0) + w;
  const Rational half(1, 2);
  for (int nu = lo; nu <= hi; ++nu) {
    if (nu == 0 || nu == n) continue;
    Rational scale = convention == VirasoroConvention::Normalized ? half * twist(nu) * twist(n - nu) : Rational(1);
    for (const auto& t : delta) normal_ordered(space, nu, t.left, n - nu, t.right, scale * t.coeff, v, out);
  }
  return out;
}

RelationReport check_heisenberg_relations(const FockSpace& space, const CheckOptions& options) {
  if (options.weight_bound < 0 || options.level_bound < 1)
    throw PreconditionError("heisenberg check: weight bound must be >= 0 and level bound >= 1");
  const auto& M = space.model();
  const std::size_t dim = M.dim();
  const int K = options.level_bound;
  std::vector<int> levels;
  for (int n = -K; n <= K; ++n)
    if (n != 0) levels.push_back(n);

  RelationReport report;
  report.relation = "heisenberg";
  report.weight_bound = options.weight_bound;
  report.level_bound = K;
  for (int n : levels)
    for (int m : levels) report.entries.push_back({"heisenberg", n, m, 0, 0, std::nullopt});
  const std::size_t L = levels.size();

  auto check = [&](const Monomial& mono, std::size_t index, std::vector<LocalEntry>& local) {
    const FockState v = FockState::basis(mono);
    // cache[li][j] = p_{levels[li]}(e_j) v
    std::vector<std::vector<FockState>> cache(L, std::vector<FockState>(dim));
    for (std::size_t li = 0; li < L; ++li)
      for (std::size_t j = 0; j < dim; ++j) space.apply_basis_op(levels[li], j, mono, Rational(1), cache[li][j]);
    for (std::size_t ni = 0; ni < L; ++ni)
      for (std::size_t mi = 0; mi < L; ++mi) {
        const int n = levels[ni], m = levels[mi];
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) {
            FockState lhs = space.apply_basis_op(n, i, cache[mi][j]);
            FockState ba = space.apply_basis_op(m, j, cache[ni][i]);
            if (M.is_odd(i) && M.is_odd(j))
              lhs += ba;
            else
              lhs -= ba;
            FockState rhs;
            if (n == -m && !M.pairing(i, j).is_zero()) {
              Rational f = ((n - 1) % 2 == 0) ? Rational(n) : Rational(-n);
              rhs = v * (f * M.pairing(i, j));
            }
            auto& entry = local[ni * L + mi];
            ++entry.checks;
            if (lhs != rhs)
              entry.fail(index, [&] {
                return RelationWitness{i, j, space.to_string(mono), space.to_string(lhs), space.to_string(rhs)};
              });
          }
      }
  };
  return run_exhaustive(space, std::move(report), options, check);
}

RelationReport check_virasoro_relations(const FockSpace& space, const CheckOptions& options,
                                        VirasoroConvention convention) {
  if (options.weight_bound < 0 || options.level_bound < 0)
    throw PreconditionError("virasoro check: bounds must be non-negative");
  const auto& M = space.model();
  for (std::size_t i = 0; i < M.dim(); ++i)
    if (M.is_odd(i)) throw PreconditionError("virasoro check: the model has odd cohomology (b1 != 0)");
  const std::size_t dim = M.dim();
  const int K = options.level_bound;
  const int K2 = 2 * K;

  RelationReport report;
  report.relation = "virasoro";
  report.weight_bound = options.weight_bound;
  report.level_bound = K;
  for (int n = -K; n <= K; ++n)
    for (int m = -K; m <= K; ++m) report.entries.push_back({"virasoro", n, m, 0, 0, std::nullopt});
  const std::size_t L = static_cast<std::size_t>(2 * K + 1);

  // ∫ c_2 e_a e_b and the expansion of e_a e_b
  const auto& c2 = M.euler_class();
  std::vector<Rational> central(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      central[a * dim + b] = M.integrate(M.multiply(c2, M.multiply(M.basis_element(a), M.basis_element(b))));

  auto check = [&](const Monomial& mono, std::size_t index, std::vector<LocalEntry>& local) {
    const FockState v = FockState::basis(mono);
    // cache[s + K2][k] = L_s(e_k) v for |s| ≤ 2K
    std::vector<std::vector<FockState>> cache(static_cast<std::size_t>(2 * K2 + 1), std::vector<FockState>(dim));
    for (int s = -K2; s <= K2; ++s)
      for (std::size_t k = 0; k < dim; ++k)
        cache[static_cast<std::size_t>(s + K2)][k] = apply_virasoro(space, s, M.basis_element(k), v, convention);
    auto cached = [&](int s, std::size_t k) -> const FockState& { return cache[static_cast<std::size_t>(s + K2)][k]; };
    for (int n = -K; n <= K; ++n)
      for (int m = -K; m <= K; ++m) {
        const std::size_t e = static_cast<std::size_t>(n + K) * L + static_cast<std::size_t>(m + K);
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < dim; ++b) {
            FockState lhs = apply_virasoro(space, n, M.basis_element(a), cached(m, b), convention);
            lhs -= apply_virasoro(space, m, M.basis_element(b), cached(n, a), convention);
            FockState rhs;
            if (n != m)
              for (const auto& [k, c] : M.product_terms(a, b)) rhs += cached(n + m, k) * (Rational(n - m) * c);
            if (n == -m && n != 0) {
              Rational z = Rational(n * n * n - n, 12) * central[a * dim + b];
              rhs += v * z;
            }
            auto& entry = local[e];
            ++entry.checks;
            if (lhs != rhs)
              entry.fail(index, [&] {
                return RelationWitness{a, b, space.to_string(mono), space.to_string(lhs), space.to_string(rhs)};
              });
          }
      }
  };
  return run_exhaustive(space, std::move(report), options, check);
}

Rational virasoro_central_value(const FockSpace& space, int n, const FrobeniusModel::Element& alpha,
                                const FrobeniusModel::Element& beta, VirasoroConvention convention) {
  const auto& M = space.model();
  const FockState vac = space.vacuum();
  FockState x = apply_virasoro(space, n, alpha, apply_virasoro(space, -n, beta, vac, convention), convention);
  x -= apply_virasoro(space, -n, beta, apply_virasoro(space, n, alpha, vac, convention), convention);
  x -= apply_virasoro(space, 0, M.multiply(alpha, beta), vac, convention) * Rational(2 * n);
  return x.coefficient(Monomial{});
}

}  // namespace hilbgen
