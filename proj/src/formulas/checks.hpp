#pragma once

#include <string>

#include "paths/histoire.hpp"

namespace qcross {

/// Outcome of a self-check; `detail` names the first failing case.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

inline constexpr int kMaxOrthoN = 6;
inline constexpr int kMaxRecurrenceN = 12;

/// Recurrence coefficients b_n, lambda_n of the family's monic orthogonal
/// polynomials P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1}.
MPoly ortho_b(Family f, int n);
MPoly ortho_lambda(Family f, int n);

/// Builds P_0..P_N and checks L(P_i P_j) = 0 for i != j and
/// L(P_i^2) = lambda_1 ... lambda_i, with L(x^m) the histoire path sum.
CheckResult ortho_check(Family f, int N);

/// The two holonomic recurrences satisfied by |P_{n,k}(c,d)|, one in n and
/// one in k, for all n <= n_max and k <= k_max.
CheckResult prefix_recurrence_check(int n_max, int k_max);

}  // namespace qcross
