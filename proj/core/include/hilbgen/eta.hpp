#pragma once

#include "hilbgen/series.hpp"

namespace hilbgen {

/// η(τ)^m = q^{m/24} · Π_{n≥1} (1 - q^n)^m. The fractional prefactor is kept
/// symbolic; `series` holds only the integer-exponent product.
struct EtaPower {
  int exponent = 0;
  Series series;
  Rational prefactor_exponent;  // m/24, never expanded
};

/// Π_{n=1..N} (1 - q^n)^m to order N.
EtaPower eta_power(int m, int order);

/// Δ = q·Π(1 - q^n)^24 to order N.
Series discriminant(int order);

}  // namespace hilbgen
