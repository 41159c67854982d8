#include "hilbgen/surface.hpp"

#include <algorithm>
#include <bit>
#include <fstream>

#include "hilbgen/error.hpp"

namespace hilbgen {

using nlohmann::json;

void validate_topology(const SurfaceTopology& s) {
  for (int b : s.betti)
    if (b < 0) throw PreconditionError("Betti numbers must be non-negative");
  if (s.betti[0] != s.betti[4] || s.betti[1] != s.betti[3])
    throw PreconditionError("Betti numbers violate Poincaré duality (b0 = b4, b1 = b3)");
}

int euler_number(const SurfaceTopology& s) {
  return s.betti[0] - s.betti[1] + s.betti[2] - s.betti[3] + s.betti[4];
}

std::optional<bool> riemann_roch_consistent(const SurfaceTopology& s, const LineBundleData& l) {
  if (!l.L2 || !s.chi_O) return std::nullopt;
  int twice = 2 * *s.chi_O + *l.L2 - l.LK;
  return twice % 2 == 0 && twice / 2 == l.chi_L;
}

namespace {

using Product = FrobeniusModel::Product;

// 1, middle classes with diagonal pairing (first `positive` entries +1, rest -1), point.
FrobeniusModel even_model(int middle, int positive, int euler, FrobeniusModel::Element canonical_middle) {
  const std::size_t n = static_cast<std::size_t>(middle) + 2;
  const std::size_t pt = n - 1;
  std::vector<int> degrees(n, 2);
  degrees.front() = 0;
  degrees.back() = 4;
  std::vector<std::string> labels{"1"};
  for (int a = 1; a <= middle; ++a) labels.push_back("d" + std::to_string(a));
  labels.push_back("pt");

  std::vector<Product> products;
  for (std::size_t i = 0; i < n; ++i) {
    products.push_back({0, i, i, 1});
    if (i != 0) products.push_back({i, 0, i, 1});
  }
  for (int a = 1; a <= middle; ++a) {
    auto ia = static_cast<std::size_t>(a);
    products.push_back({ia, ia, pt, a <= positive ? Rational(1) : Rational(-1)});
  }
  FrobeniusModel::Element integral(n), euler_class(n), canonical(n);
  integral[pt] = 1;
  euler_class[pt] = euler;
  for (std::size_t a = 0; a < canonical_middle.size(); ++a) canonical[a + 1] = canonical_middle[a];
  return FrobeniusModel(std::move(degrees), 0, products, std::move(integral), std::move(euler_class),
                        std::move(labels), std::move(canonical));
}

// Exterior algebra Λ(Q^4) with ∫ e1e2e3e4 = 1; basis ordered by degree, then lexicographically.
FrobeniusModel torus_model() {
  std::vector<unsigned> subsets;
  for (unsigned s = 0; s < 16; ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the sorted index list: lower bits first
    for (unsigned bit = 0; bit < 4; ++bit) {
      bool ia = (a >> bit) & 1u, ib = (b >> bit) & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });
  std::vector<std::size_t> index_of(16);
  for (std::size_t i = 0; i < subsets.size(); ++i) index_of[subsets[i]] = i;

  std::vector<int> degrees;
  std::vector<std::string> labels;
  for (unsigned s : subsets) {
    degrees.push_back(std::popcount(s));
    std::string l = s == 0 ? "1" : "e";
    for (unsigned bit = 0; bit < 4; ++bit)
      if ((s >> bit) & 1u) l += std::to_string(bit + 1);
    labels.push_back(l);
  }

  std::vector<Product> products;
  for (unsigned a : subsets)
    for (unsigned b : subsets) {
      if (a & b) continue;
      // sign of merging the ordered generators of a with those of b
      int inversions = 0;
      for (unsigned i = 0; i < 4; ++i)
        if ((a >> i) & 1u)
          for (unsigned j = 0; j < i; ++j)
            if ((b >> j) & 1u) ++inversions;
      products.push_back({index_of[a], index_of[b], index_of[a | b], inversions % 2 ? Rational(-1) : Rational(1)});
    }
  FrobeniusModel::Element integral(16), euler_class(16);
  integral[index_of[15]] = 1;
  return FrobeniusModel(std::move(degrees), index_of[0], products, std::move(integral), std::move(euler_class),
                        std::move(labels));
}

}  // namespace

FrobeniusModel default_frobenius(const SurfaceTopology& s, int positive_middle) {
  validate_topology(s);
  if (s.betti[0] != 1) throw PreconditionError("default Frobenius model needs a connected surface (b0 = 1)");
  if (s.betti[1] == 0) {
    int positive = positive_middle < 0 ? s.betti[2] : positive_middle;
    return even_model(s.betti[2], positive, euler_number(s), {});
  }
  if (s.betti == std::array<int, 5>{1, 4, 6, 4, 1}) return torus_model();
  throw PreconditionError("no default Frobenius model for surfaces with odd cohomology other than (1,4,6,4,1)");
}

std::vector<std::string> fixture_names() { return {"k3", "p2", "abelian"}; }

Surface surface_fixture(const std::string& name) {
  if (name == "k3") {
    SurfaceTopology t{"k3", {1, 0, 22, 0, 1}, 2, 0, true};
    // Intersection form of signature (3,19); only nondegeneracy matters downstream.
    return {t, even_model(22, 3, 24, {})};
  }
  if (name == "p2") {
    SurfaceTopology t{"p2", {1, 0, 1, 0, 1}, 1, 9, false};
    return {t, even_model(1, 1, 3, {Rational(-3)})};
  }
  if (name == "abelian") {
    SurfaceTopology t{"abelian", {1, 4, 6, 4, 1}, 0, 0, true};
    return {t, torus_model()};
  }
  throw PreconditionError("unknown surface fixture '" + name + "'");
}

namespace {

FrobeniusModel::Element parse_element(const json& j) {
  FrobeniusModel::Element e;
  for (const auto& c : j) e.push_back(c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>()));
  return e;
}

json element_json(const FrobeniusModel::Element& e) {
  json out = json::array();
  for (const auto& c : e) out.push_back(c.to_string());
  return out;
}

}  // namespace

Surface surface_from_json(const json& j) {
  Surface s;
  s.topology.name = j.value("name", std::string("custom"));
  auto betti = j.at("betti").get<std::vector<int>>();
  if (betti.size() != 5) throw PreconditionError("betti must list b0..b4");
  std::copy(betti.begin(), betti.end(), s.topology.betti.begin());
  if (j.contains("chi_O") && !j["chi_O"].is_null()) s.topology.chi_O = j["chi_O"].get<int>();
  if (j.contains("K2") && !j["K2"].is_null()) s.topology.K2 = j["K2"].get<int>();
  s.topology.k_trivial = j.value("k_trivial", false);
  validate_topology(s.topology);

  if (j.contains("frobenius")) {
    const auto& f = j["frobenius"];
    std::vector<Product> products;
    for (const auto& p : f.at("products")) {
      if (p.size() != 4) throw PreconditionError("product entries are [i,j,k,\"c\"]");
      products.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>(), p[2].get<std::size_t>(),
                          p[3].is_string() ? Rational::parse(p[3].get<std::string>()) : Rational(p[3].get<long>())});
    }
    s.model = FrobeniusModel(f.at("degrees").get<std::vector<int>>(), f.value("unit", std::size_t{0}), products,
                             parse_element(f.at("integral")), parse_element(f.at("euler_class")),
                             f.value("labels", std::vector<std::string>{}),
                             f.contains("canonical_class") ? parse_element(f["canonical_class"])
                                                           : FrobeniusModel::Element{});
  }
  return s;
}

json surface_to_json(const Surface& s) {
  json j{{"name", s.topology.name}, {"betti", s.topology.betti}, {"k_trivial", s.topology.k_trivial}};
  j["chi_O"] = s.topology.chi_O ? json(*s.topology.chi_O) : json(nullptr);
  j["K2"] = s.topology.K2 ? json(*s.topology.K2) : json(nullptr);
  if (s.model) {
    const auto& m = *s.model;
    json products = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t k = 0; k < m.dim(); ++k)
        for (const auto& [out, c] : m.product_terms(i, k)) products.push_back({i, k, out, c.to_string()});
    j["frobenius"] = {{"degrees", m.degrees()},
                      {"labels", m.labels()},
                      {"unit", m.unit_index()},
                      {"products", products},
                      {"integral", element_json(m.integral_values())},
                      {"euler_class", element_json(m.euler_class())},
                      {"canonical_class", element_json(m.canonical_class())}};
  }
  return j;
}

Surface load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read surface fixture '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PreconditionError("malformed surface fixture '" + path + "': " + e.what());
  }
  return surface_from_json(j);
}

Surface resolve_surface(const std::string& selector) {
  auto names = fixture_names();
  if (std::find(names.begin(), names.end(), selector) != names.end()) return surface_fixture(selector);
  return load_surface(selector);
}

}  // namespace hilbgen
