#pragma once

#include <random>

#include <doctest.h>

#include "algebra/mpoly.hpp"

namespace qcross::testing {

inline MPoly P(const char* text) { return MPoly::parse(text); }

/// Small random polynomial in q, y, c with coefficients in [-3, 3].
inline MPoly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), coef(-3, 3), ex(0, max_exp);
  MPoly out;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(ex(rng));
    e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint32_t>(ex(rng) / 2);
    e[static_cast<std::size_t>(Var::c)] = static_cast<std::uint32_t>(ex(rng) / 3);
    out += MPoly::monomial(BigInt(coef(rng)), e);
  }
  return out;
}

}  // namespace qcross::testing

namespace doctest {
template <>
struct StringMaker<qcross::MPoly> {
  static String convert(const qcross::MPoly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
