#include "hilbgen/curves.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>

#include "hilbgen/eta.hpp"
#include "hilbgen/series_json.hpp"

namespace hilbgen {

namespace {

// log(DG2/q) and log(Δ·D²G2/q²) to order N.
struct NodeLogs {
  Series log_a;
  Series log_c;
};

NodeLogs node_logs(int order) {
  Series g2 = G2_series(order + 1);
  Series dg = ps_D(g2);
  Series a = ps_shift_down(dg, 1);
  Series c = ps_mul(eta_power(24, order).series, ps_shift_down(ps_D(dg), 1));
  return {ps_log(a), ps_log(c)};
}

Series truncated_to(const Series& s, int order, const char* what) {
  if (s.order() < order)
    throw PreconditionError(std::string(what) + " is known only to order " + std::to_string(s.order()));
  return s.truncated(order);
}

void check_b(const BSeriesPair& b) {
  if (!b.B1[0].is_one() || !b.B2[0].is_one()) throw PreconditionError("B1 and B2 must have constant term 1");
}

PolySeries times_poly(const PolySeries& s, const Poly& p) {
  PolySeries r(s.order(), p);
  for (int i = 0; i <= s.order(); ++i) r.set(i, s[i] * p);
  return r;
}

// q as a series in s = DG2; order at least 1 so the linear term is known.
Series s_inverse(int order) { return ps_revert(ps_D(G2_series(std::max(order, 1)))); }

}  // namespace

Series yau_zaslow(int order) {
  if (order < 0) throw PreconditionError("yau_zaslow: order must be non-negative");
  return eta_power(-24, order).series;
}

Series G2_series(int order) {
  if (order < 0) throw PreconditionError("G2_series: order must be non-negative");
  // Δ = qP, so DΔ/Δ = 1 + DP/P
  Series p = eta_power(24, order).series;
  Series ratio = ps_mul(ps_D(p), ps_inverse(p));
  ratio.set(0, ratio[0] + Rational(1));
  return ps_scale(ratio, Rational(-1, 24));
}

const std::vector<std::string>& node_variables() {
  static const std::vector<std::string> vars{"x", "y", "z", "w"};
  return vars;
}

Rational NodePolynomial::evaluate(const CurveInvariants& inv) const {
  std::array<Rational, 4> point{inv.x, inv.y, inv.z, inv.w};
  return poly.evaluate(point);
}

BSeriesPair BSeriesPair::trivial(int order) { return {Series::one(order), Series::one(order), order}; }

Series node_generating_function(const CurveInvariants& inv, const BSeriesPair& b, int order) {
  if (order < 0) throw PreconditionError("node_generating_function: order must be non-negative");
  check_b(b);
  auto logs = node_logs(order);
  Series l = ps_scale(logs.log_a, inv.x) - ps_scale(logs.log_c, inv.y * Rational(1, 2));
  if (!inv.z.is_zero()) l = l + ps_scale(ps_log(truncated_to(b.B1, order, "B1")), inv.z);
  if (!inv.w.is_zero()) l = l + ps_scale(ps_log(truncated_to(b.B2, order, "B2")), inv.w);
  return ps_exp(l);
}

PolySeries node_generating_function_formal(const BSeriesPair& b, int order) {
  if (order < 0) throw PreconditionError("node_generating_function: order must be non-negative");
  check_b(b);
  const auto& vars = node_variables();
  auto logs = node_logs(order);
  auto var = [&](const char* name) { return Poly::variable(vars, name); };
  PolySeries l = times_poly(promote(logs.log_a, vars), var("x"));
  l = l - times_poly(promote(logs.log_c, vars), var("y") * Rational(1, 2));
  l = l + times_poly(promote(ps_log(truncated_to(b.B1, order, "B1")), vars), var("z"));
  l = l + times_poly(promote(ps_log(truncated_to(b.B2, order, "B2")), vars), var("w"));
  return ps_exp(l);
}

Series node_series_in_s(const CurveInvariants& inv, const BSeriesPair& b, int order) {
  Series f = node_generating_function(inv, b, order);
  return ps_compose(f, s_inverse(order));
}

std::vector<NodePolynomial> extract_node_polynomials(const BSeriesPair& b, int delta_max) {
  if (delta_max < 0) throw PreconditionError("extract_node_polynomials: delta_max must be non-negative");
  if (b.known_order < delta_max || b.B1.order() < delta_max || b.B2.order() < delta_max)
    throw PreconditionError("extract_node_polynomials: B is known only to order " + std::to_string(b.known_order));
  PolySeries f = node_generating_function_formal(b, delta_max);
  PolySeries t = ps_compose(f, s_inverse(delta_max));
  std::vector<NodePolynomial> out;
  for (int d = 0; d <= delta_max; ++d) {
    if (t[d].total_degree() > d)
      throw ComputationError("T_" + std::to_string(d) + " has total degree " + std::to_string(t[d].total_degree()));
    out.push_back({d, t[d]});
  }
  return out;
}

std::vector<KnownCount> parse_known_counts(std::istream& in) {
  std::vector<KnownCount> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 6)
      throw PreconditionError("counts line " + std::to_string(lineno) + ": expected \"chiL chiO LK K2 delta count\"");
    try {
      KnownCount k;
      k.inv = {Rational::parse(tok[0]), Rational::parse(tok[1]), Rational::parse(tok[2]), Rational::parse(tok[3])};
      k.delta = std::stoi(tok[4]);
      k.count = Rational::parse(tok[5]);
      out.push_back(std::move(k));
    } catch (const std::exception& e) {
      throw PreconditionError("counts line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

CalibrationReport calibrate_B(const std::vector<KnownCount>& known, int delta_max) {
  if (delta_max < 0) throw PreconditionError("calibrate_B: delta_max must be non-negative");
  CalibrationReport rep;
  rep.b = BSeriesPair::trivial(delta_max);
  rep.b.known_order = 0;
  for (std::size_t i = 0; i < known.size(); ++i)
    if (known[i].delta < 1 || known[i].delta > delta_max) rep.ignored.push_back(i);
  bool prefix = true;
  for (int d = 1; d <= delta_max; ++d) {
    CalibrationOrder ord;
    ord.delta = d;
    BSeriesPair current{rep.b.B1.truncated(d), rep.b.B2.truncated(d), d};
    // reduced rows (a, b | c) with their source constraint
    std::vector<std::array<Rational, 3>> basis;
    for (std::size_t i = 0; i < known.size(); ++i) {
      const auto& k = known[i];
      if (k.delta != d) continue;
      ++ord.constraints;
      Rational rest = node_series_in_s(k.inv, current, d)[d];
      std::array<Rational, 3> row{k.inv.z, k.inv.w, k.count - rest};
      for (const auto& br : basis) {
        std::size_t pivot = br[0].is_zero() ? 1 : 0;
        if (row[pivot].is_zero()) continue;
        Rational f = row[pivot] / br[pivot];
        for (int c = 0; c < 3; ++c) row[static_cast<std::size_t>(c)] -= f * br[static_cast<std::size_t>(c)];
      }
      if (row[0].is_zero() && row[1].is_zero()) {
        if (!row[2].is_zero() && !ord.offending) ord.offending = i;
        continue;
      }
      basis.push_back(row);
    }
    ord.rank = static_cast<int>(basis.size());
    Rational b1 = 0, b2 = 0;
    if (basis.size() == 2) {
      const auto& r0 = basis[0];
      const auto& r1 = basis[1];
      Rational det = r0[0] * r1[1] - r0[1] * r1[0];
      b1 = (r0[2] * r1[1] - r0[1] * r1[2]) / det;
      b2 = (r0[0] * r1[2] - r0[2] * r1[0]) / det;
    } else if (basis.size() == 1) {
      const auto& r0 = basis[0];
      if (!r0[0].is_zero())
        b1 = r0[2] / r0[0];
      else
        b2 = r0[2] / r0[1];
    }
    rep.b.B1.set(d, b1);
    rep.b.B2.set(d, b2);
    if (ord.offending) {
      ord.status = "inconsistent";
      rep.consistent = false;
    } else {
      ord.status = ord.rank == 2 ? "determined" : "underdetermined";
    }
    if (ord.status != "determined") {
      rep.determined = false;
      prefix = false;
    }
    if (prefix) rep.b.known_order = d;
    rep.orders.push_back(ord);
  }
  if (delta_max == 0) rep.determined = false;
  for (int d = 0; d <= delta_max; ++d)
    if (!rep.b.B1[d].is_integer() || !rep.b.B2[d].is_integer()) rep.integral = false;
  return rep;
}

nlohmann::json CalibrationReport::to_json() const {
  nlohmann::json ords = nlohmann::json::array();
  for (const auto& o : orders) {
    nlohmann::json j{{"delta", o.delta}, {"constraints", o.constraints}, {"rank", o.rank}, {"status", o.status}};
    if (o.status == "underdetermined") j["free"] = 2 - o.rank;
    if (o.offending) j["offending_constraint"] = *o.offending;
    ords.push_back(std::move(j));
  }
  return {{"B1", hilbgen::to_json(b.B1)}, {"B2", hilbgen::to_json(b.B2)},   {"known_order", b.known_order},
          {"consistent", consistent},      {"determined", determined}, {"integral", integral},
          {"ignored_constraints", ignored}, {"orders", std::move(ords)}};
}

bool K3Report::passed() const {
  if (!offset_validated) return false;
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

nlohmann::json K3Report::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows)
    rs.push_back({{"g", r.g}, {"predicted", r.predicted.to_string()}, {"n_g", r.expected.to_string()}, {"ok", r.ok}});
  return {{"chiL_convention", "chi(L) = g + 1 + offset"},
          {"offset", offset},
          {"offset_validated", offset_validated},
          {"passed", passed()},
          {"rows", std::move(rs)}};
}

K3Report k3_consistency(int g_max) {
  if (g_max < 1 || g_max > 10) throw PreconditionError("k3_consistency: g_max must be in 1..10");
  Series n = yau_zaslow(g_max);
  auto predicted = [](int g, int offset) {
    CurveInvariants inv{Rational(g + 1 + offset), Rational(2), Rational(0), Rational(0)};
    return node_series_in_s(inv, BSeriesPair::trivial(g), g)[g];
  };
  K3Report rep;
  for (int offset : {0, -1, 1, -2, 2})
    if (predicted(0, offset) == n[0] && predicted(1, offset) == n[1]) {
      rep.offset = offset;
      rep.offset_validated = true;
      break;
    }
  for (int g = 0; g <= g_max; ++g) {
    Rational p = predicted(g, rep.offset);
    rep.rows.push_back({g, p, n[g], p == n[g]});
  }
  return rep;
}

}  // namespace hilbgen
