#pragma once

#include <cstdint>

#include "algebra/mpoly.hpp"
#include "algebra/series.hpp"
#include "paths/histoire.hpp"

namespace qcross {

/// Parameters (a, b, c) of K(at, bt, ct^2; q). None may contain t.
struct KParams {
  MPoly a, b, c;
};

/// The family's parameters. With `symbolic` the free parameter stays symbolic
/// (c for Charlier, b for Charlier*); otherwise it is set to y(1-q).
KParams k_family_params(Family f, bool symbolic);

/// Bottom-up convergent of the continued fraction, truncated at t^order.
TruncSeries k_series_cf(const KParams& p, std::uint32_t order);

/// The closed-form series, in the symbolic parameters of
/// k_family_params(f, true).
TruncSeries k_series_closed(Family f, std::uint32_t order);

/// (1-at)^{-1} sum_i t^i prod_{j=1..i} (b - c q^j t) / (aqt;q)_i, and the
/// 1phi1 form sum_i (-1)^i q^{binom(i+1,2)} c^i t^{2i} / (aqt;q)_i when b = 0.
TruncSeries k_series_hypergeometric(const KParams& p, std::uint32_t order);

/// Fixed-point iteration of M(z) = 1 / (1 + C - (A+B)z - (C - ABz)(1-qz) M(qz))
/// in the two variables t and z, then z := 1. Throws NonConvergence when the
/// iterates have not settled within order + 2 rounds.
TruncSeries functional_equation_solve(const KParams& p, std::uint32_t order);

}  // namespace qcross
