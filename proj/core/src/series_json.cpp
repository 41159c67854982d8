#include "hilbgen/series_json.hpp"

namespace hilbgen {

using nlohmann::json;

namespace {

int read_order(const json& j) {
  int order = j.at("order").get<int>();
  if (order < 0) throw PreconditionError("series order must be non-negative");
  return order;
}

}  // namespace

json integer_json(const BigInt& v) {
  if (fits_int64(v)) return json(v.get_si());
  return json(v.get_str());
}

json to_json(const Series& s, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.to_string());
  return json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const PolySeries& s, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) {
    json terms = json::array();
    for (const auto& [e, v] : c.terms()) {
      json t = json::array();
      for (int x : e) t.push_back(x);
      t.push_back(v.to_string());
      terms.push_back(t);
    }
    coeffs.push_back(terms);
  }
  return json{{"var", var}, {"order", s.order()}, {"aux", s.proto().vars()}, {"coeffs", coeffs}};
}

Series series_from_json(const json& j) {
  if (j.contains("aux")) throw KindError("expected a rational series, found polynomial coefficients");
  int order = read_order(j);
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) coeffs.push_back(Rational::parse(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.push_back(Rational(c.get<long>()));
    else throw PreconditionError("series coefficient must be a \"num/den\" string");
  }
  if (coeffs.size() > static_cast<std::size_t>(order) + 1)
    throw PreconditionError("series stores an exponent above its order");
  return Series(std::move(coeffs), order);
}

PolySeries poly_series_from_json(const json& j) {
  auto vars = j.at("aux").get<std::vector<std::string>>();
  int order = read_order(j);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() > static_cast<std::size_t>(order) + 1)
    throw PreconditionError("series stores an exponent above its order");
  PolySeries s(order, Poly(vars));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Poly p(vars);
    for (const auto& term : coeffs[i]) {
      if (term.size() != vars.size() + 1) throw PreconditionError("malformed polynomial term");
      Poly::Exponent e;
      for (std::size_t k = 0; k < vars.size(); ++k) e.push_back(term[k].get<int>());
      p.add_term(e, Rational::parse(term.back().get<std::string>()));
    }
    s.set(static_cast<int>(i), std::move(p));
  }
  return s;
}

}  // namespace hilbgen
