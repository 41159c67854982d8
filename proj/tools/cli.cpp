#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hilbgen/curves.hpp"
#include "hilbgen/dmvv.hpp"
#include "hilbgen/error.hpp"
#include "hilbgen/hilb.hpp"
#include "hilbgen/orbifold.hpp"
#include "hilbgen/relations.hpp"
#include "hilbgen/series_json.hpp"
#include "hilbgen/surface.hpp"
#include "hilbgen/walls.hpp"

namespace hilbgen::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string surface = "k3";
  int order = 4;
  std::string format = "json";
  int weight_bound = 6;
  int level_bound = 4;
  std::string relation = "all";
  double timeout = 0;
  std::string counts;
  std::string table;
  int q_order = 4;
  long e_s = 24;
  std::string lattice;
  std::vector<long> box{-3, 3};
  std::string chi_l = "0", chi_o = "0", lk = "0", k2 = "0";
  std::vector<std::string> b1, b2;
  bool formal = false;
};

// Top-level keys as "key: value" lines, for --format plain.
void print_plain(std::ostream& out, const json& j) {
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_structured()) {
      out << k << ":\n";
      for (const auto& e : v) out << "  " << e.dump() << "\n";
    } else {
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(std::ostream& out, const Options& o, const json& j) {
  if (o.format == "plain")
    print_plain(out, j);
  else
    out << j.dump() << "\n";
}

json integer_coeffs(const Series& s) {
  json a = json::array();
  for (const auto& c : s.coefficients()) {
    if (!c.is_integer()) throw ComputationError("series has non-integer coefficients");
    a.push_back(integer_json(c.to_integer()));
  }
  return a;
}

json table_json(const PoincareTable& t) {
  json rows = json::array();
  for (std::size_t n = 0; n < t.size(); ++n) rows.push_back(poincare_entry_json(static_cast<int>(n), t[n]));
  return rows;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  return in;
}

BSeriesPair b_pair(const Options& o, int order) {
  auto series = [&](const std::vector<std::string>& coeffs) {
    Series s = Series::one(order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < order; ++i)
      s.set(static_cast<int>(i) + 1, Rational::parse(coeffs[i]));
    return s;
  };
  int known = static_cast<int>(std::min(o.b1.size(), o.b2.size()));
  if (o.b1.empty() && o.b2.empty()) known = order;
  return {series(o.b1), series(o.b2), std::min(known, order)};
}

CurveInvariants invariants(const Options& o) {
  return {Rational::parse(o.chi_l), Rational::parse(o.chi_o), Rational::parse(o.lk), Rational::parse(o.k2)};
}

int cmd_hilb_betti(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  emit(out, o, {{"surface", s.topology.name}, {"table", table_json(hilbert_poincare(s.topology, o.order))}});
  return kOk;
}

int cmd_hilb_euler(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  int e = euler_number(s.topology);
  emit(out, o,
       {{"surface", s.topology.name}, {"euler", e}, {"coeffs", integer_coeffs(hilbert_euler_series(e, o.order))}});
  return kOk;
}

int cmd_sym_poincare(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  emit(out, o,
       {{"surface", s.topology.name}, {"table", table_json(symmetric_power_poincare(s.topology, o.order))}});
  return kOk;
}

int cmd_strata_check(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  auto table = hilbert_poincare(s.topology, o.order);
  json rows = json::array();
  bool all = true;
  for (int n = 0; n <= o.order; ++n) {
    bool ok = table[static_cast<std::size_t>(n)] == hilbert_poincare_via_strata(s.topology, n);
    all = all && ok;
    rows.push_back({{"n", n}, {"ok", ok}});
  }
  emit(out, o, {{"surface", s.topology.name}, {"passed", all}, {"rows", rows}});
  return all ? kOk : kFailure;
}

int cmd_dmvv(const Options& o, std::ostream& out) {
  if (o.table.empty()) throw PreconditionError("dmvv: --table is required");
  auto in = open_input(o.table);
  DmvvTable t = parse_dmvv_table(in);
  PolySeries f = dmvv_product(t, o.order, o.q_order);
  DmvvTable back = dmvv_invert(f, o.q_order);
  // only the entries the product can see are recoverable
  DmvvTable seen;
  for (const auto& [ml, c] : t.c)
    if (ml.first <= o.order * o.q_order) seen.set(ml.first, ml.second, c);
  bool ok = back.same_entries(seen);
  emit(out, o, {{"product", to_json(f, "p")}, {"roundtrip", ok}});
  return ok ? kOk : kFailure;
}

int cmd_fock_check(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  if (!s.model) throw PreconditionError("surface has no cohomology model");
  if (o.relation != "all" && o.relation != "heisenberg" && o.relation != "virasoro")
    throw PreconditionError("--relation must be heisenberg, virasoro or all");
  CheckOptions opts;
  opts.weight_bound = o.weight_bound;
  opts.level_bound = o.level_bound;
  if (o.timeout > 0)
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(o.timeout));
  FockSpace space(*s.model);
  json reports = json::array();
  bool ok = true;
  auto add = [&](const RelationReport& r) {
    json j = r.to_json();
    j.erase("seconds");
    reports.push_back(j);
    ok = ok && r.passed();
  };
  if (o.relation != "virasoro") add(check_heisenberg_relations(space, opts));
  if (o.relation != "heisenberg") {
    bool odd = false;
    for (std::size_t i = 0; i < s.model->dim(); ++i) odd = odd || s.model->is_odd(i);
    if (odd && o.relation == "all") {
      reports.push_back({{"relation", "virasoro"}, {"status", "skipped"}, {"reason", "odd cohomology"}});
    } else {
      opts.level_bound = std::min(o.level_bound, 3);
      add(check_virasoro_relations(space, opts));
    }
  }
  emit(out, o, {{"surface", s.topology.name}, {"passed", ok}, {"reports", reports}});
  return ok ? kOk : kFailure;
}

json orbifold_json(const OrbifoldDatum& d, int n) {
  return {{"n", n},
          {"orbifold_euler", integer_json(orbifold_euler(d))},
          {"graded", orbifold_poincare(d).betti_json()}};
}

int cmd_orb_euler(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  emit(out, o, orbifold_json(symmetric_orbifold_datum(s.topology, o.order), o.order));
  return kOk;
}

int cmd_orb_poincare(const Options& o, std::ostream& out) {
  auto s = resolve_surface(o.surface);
  auto d = symmetric_orbifold_datum(s.topology, o.order);
  json j = orbifold_json(d, o.order);
  j["sectors"] = orbifold_datum_json(d);
  j["matches_hilbert"] = orbifold_poincare(d) == hilbert_poincare(s.topology, o.order).back();
  emit(out, o, j);
  return kOk;
}

int cmd_orb_brute(const Options& o, std::ostream& out) {
  Rational v = orbifold_euler_bruteforce(o.e_s, o.order);
  json j{{"n", o.order}, {"e_S", o.e_s}, {"value", v.to_string()}, {"integral", v.is_integer()}};
  emit(out, o, j);
  return v.is_integer() ? kOk : kFailure;
}

int cmd_yz(const Options& o, std::ostream& out) {
  emit(out, o, {{"coeffs", integer_coeffs(yau_zaslow(o.order))}});
  return kOk;
}

int cmd_g2(const Options& o, std::ostream& out) {
  emit(out, o, to_json(G2_series(o.order)));
  return kOk;
}

int cmd_nodegf(const Options& o, std::ostream& out) {
  auto b = b_pair(o, o.order);
  if (o.formal)
    emit(out, o, to_json(node_generating_function_formal(b, o.order)));
  else
    emit(out, o, to_json(node_generating_function(invariants(o), b, o.order)));
  return kOk;
}

int cmd_nodepolys(const Options& o, std::ostream& out) {
  auto polys = extract_node_polynomials(b_pair(o, o.order), o.order);
  json list = json::array();
  for (const auto& p : polys) list.push_back({{"delta", p.delta}, {"T", p.poly.to_string()}});
  emit(out, o, {{"variables", node_variables()}, {"polynomials", list}});
  return kOk;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  if (o.counts.empty()) throw PreconditionError("calibrate: --counts is required");
  auto in = open_input(o.counts);
  auto rep = calibrate_B(parse_known_counts(in), o.order);
  emit(out, o, rep.to_json());
  return rep.consistent ? kOk : kFailure;
}

int cmd_k3_check(const Options& o, std::ostream& out) {
  auto rep = k3_consistency(o.order);
  emit(out, o, rep.to_json());
  return rep.passed() ? kOk : kFailure;
}

int cmd_walls(const Options& o, std::ostream& out) {
  if (o.lattice.empty()) throw PreconditionError("walls: --lattice is required");
  if (o.box.size() != 2) throw PreconditionError("--box takes two integers a,b");
  auto in = open_input(o.lattice);
  json input;
  try {
    input = json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("lattice file: ") + e.what());
  }
  Lattice l = lattice_from_json(input.at("gram"));
  LatticeVector c1 = input.contains("c1") ? lattice_vector_from_json(input["c1"]) : LatticeVector(l.rank(), BigInt(0));
  BigInt c2 = input.contains("c2") ? BigInt(input["c2"].get<long>()) : BigInt(0);
  auto walls = enumerate_wall_classes(l, c1, c2, o.box[0], o.box[1]);
  json list = json::array();
  for (const auto& xi : walls) list.push_back(lattice_vector_json(xi));
  json j{{"rank", l.rank()}, {"box", o.box}, {"walls", list}};
  if (input.contains("H") && input.contains("L")) {
    auto h = lattice_vector_from_json(input["H"]);
    auto line = lattice_vector_from_json(input["L"]);
    json sep = json::array();
    for (const auto& xi : walls)
      if (separates(l, xi, h, line)) sep.push_back(lattice_vector_json(xi));
    j["separating"] = sep;
  }
  emit(out, o, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions for Hilbert schemes of points on surfaces", "hilbgen"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto surface = [&](CLI::App* c) { c->add_option("--surface", o.surface, "preset (k3, p2, abelian) or fixture path"); };
  auto order = [&](CLI::App* c, const std::string& what) {
    c->add_option("--order", o.order, what)->check(CLI::NonNegativeNumber);
  };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
  };

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const std::vector<Sub> subs{
      {"hilb-betti", "Betti numbers of S^[n] for n <= order", cmd_hilb_betti},
      {"hilb-euler", "Euler numbers of S^[n] from the eta product", cmd_hilb_euler},
      {"sym-poincare", "Betti numbers of symmetric powers", cmd_sym_poincare},
      {"strata-check", "product formula versus stratification", cmd_strata_check},
      {"dmvv", "DMVV product of a coefficient table, with inversion roundtrip", cmd_dmvv},
      {"fock-check", "Heisenberg and Virasoro relations on the Fock space", cmd_fock_check},
      {"orb-euler", "orbifold Euler number of S^n/S_n", cmd_orb_euler},
      {"orb-poincare", "age-graded orbifold Betti numbers of S^n/S_n", cmd_orb_poincare},
      {"orb-brute", "commuting-pair orbifold Euler number", cmd_orb_brute},
      {"yz", "q/Delta coefficients", cmd_yz},
      {"g2", "G2 = -1/24 D(Delta)/Delta", cmd_g2},
      {"nodegf", "node generating function", cmd_nodegf},
      {"nodepolys", "node polynomials T_0..T_order", cmd_nodepolys},
      {"calibrate", "solve for B1, B2 from known counts", cmd_calibrate},
      {"k3-check", "node polynomials against q/Delta on K3", cmd_k3_check},
      {"walls", "wall classes of type (c1,c2) in a box", cmd_walls},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& s : subs) {
    CLI::App* c = app.add_subcommand(s.name, s.help);
    format(c);
    registered.emplace_back(c, &s);
    std::string name = s.name;
    if (name == "hilb-betti" || name == "hilb-euler" || name == "sym-poincare" || name == "strata-check" ||
        name == "orb-euler" || name == "orb-poincare" || name == "fock-check")
      surface(c);
    if (name == "fock-check") {
      c->add_option("--weight-bound", o.weight_bound, "largest state weight")->check(CLI::NonNegativeNumber);
      c->add_option("--level-bound", o.level_bound, "largest |n|")->check(CLI::PositiveNumber);
      c->add_option("--relation", o.relation, "heisenberg, virasoro or all");
      c->add_option("--timeout", o.timeout, "seconds before the check stops (reported as incomplete)")
          ->check(CLI::NonNegativeNumber);
    } else if (name == "k3-check") {
      order(c, "largest genus g (<= 10)");
    } else if (name == "walls") {
      c->add_option("--lattice", o.lattice, "JSON file with gram, c1, c2 and optional H, L");
      c->add_option("--box", o.box, "coordinate range a,b")->delimiter(',')->expected(2);
    } else {
      order(c, "truncation order or n");
    }
    if (name == "dmvv") {
      c->add_option("--table", o.table, "file of lines \"m l c\"");
      c->add_option("--q-order", o.q_order, "q truncation")->check(CLI::NonNegativeNumber);
    }
    if (name == "orb-brute") c->add_option("--e", o.e_s, "Euler number of S");
    if (name == "calibrate") c->add_option("--counts", o.counts, "file of lines \"chiL chiO LK K2 delta count\"");
    if (name == "nodegf" || name == "nodepolys") {
      c->add_option("--b1", o.b1, "coefficients of q^1.. in B1")->delimiter(',');
      c->add_option("--b2", o.b2, "coefficients of q^1.. in B2")->delimiter(',');
    }
    if (name == "nodegf") {
      c->add_option("--chiL", o.chi_l);
      c->add_option("--chiO", o.chi_o);
      c->add_option("--LK", o.lk);
      c->add_option("--K2", o.k2);
      c->add_flag("--formal", o.formal, "keep chiL, chiO, LK, K2 as variables x, y, z, w");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hilbgen: " << e.what() << "\n";
    return kUsage;
  }

  try {
    for (const auto& [c, s] : registered)
      if (c->parsed()) return s->fn(o, out);
  } catch (const PreconditionError& e) {
    err << "hilbgen: " << e.what() << "\n";
    return kUsage;
  } catch (const KindError& e) {
    err << "hilbgen: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "hilbgen: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const ComputationError& e) {
    err << "hilbgen: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "hilbgen: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace hilbgen::cli
