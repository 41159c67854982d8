#pragma once

#include <nlohmann/json.hpp>

#include "hilbgen/series.hpp"

namespace hilbgen {

/// Rational series as {"var":"q","order":N,"coeffs":["num/den",...]}.
nlohmann::json to_json(const Series& s, const std::string& var = "q");

/// Polynomial-coefficient series: additionally carries "aux":[vars...] and each
/// coefficient is a list of terms [[e_1,...,e_k,"num/den"],...].
nlohmann::json to_json(const PolySeries& s, const std::string& var = "q");

Series series_from_json(const nlohmann::json& j);
PolySeries poly_series_from_json(const nlohmann::json& j);

/// Integer as a JSON number when it fits in int64, otherwise as a decimal string.
nlohmann::json integer_json(const BigInt& v);

}  // namespace hilbgen
