#pragma once

#include <array>

#include "algebra/mpoly.hpp"
#include "paths/histoire.hpp"

namespace qcross {

/// (a, b, c, d) turning M_n(a,b,c,d) into (1-q)^n times the family's moment.
struct Specialization {
  MPoly a, b, c, d;
  /// Path length for moment index n (Hermite moments sit at even lengths).
  int path_length(Family f, int n) const { return f == Family::Hermite ? 2 * n : n; }
};

Specialization specialization_of(Family f);

/// gf of M(a,b,c,d) at the family's parameters, on the path length of moment n.
MPoly specialized_gf(Family f, int n);

/// specialized_gf(f, n) == (1-q)^n * brute_gf(f, n), computed exactly.
bool check_specialization(Family f, int n, unsigned jobs = 1);

}  // namespace qcross
