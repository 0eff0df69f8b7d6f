#include "formulas/checks.hpp"

#include <vector>

#include "algebra/qnumbers.hpp"
#include "error.hpp"
#include "formulas/closed_forms.hpp"
#include "paths/weight_system.hpp"

namespace qcross {

MPoly ortho_b(Family f, int n) {
  const MPoly y = MPoly::var(Var::y);
  switch (f) {
    case Family::Hermite: return MPoly();
    case Family::Charlier: return y + q_int(n);
    case Family::CharlierStar: return y * q_pow(static_cast<std::uint32_t>(n)) + q_int(n);
    case Family::Laguerre: return q_int(n) + y * q_int(n + 1);
  }
  return MPoly();
}

MPoly ortho_lambda(Family f, int n) {
  const MPoly y = MPoly::var(Var::y);
  switch (f) {
    case Family::Hermite: return q_int(n);
    case Family::Charlier: return y * q_int(n);
    case Family::CharlierStar: return n == 0 ? MPoly() : y * q_int(n) * q_pow(static_cast<std::uint32_t>(n - 1));
    case Family::Laguerre: return y * q_int(n) * q_int(n);
  }
  return MPoly();
}

namespace {

using XPoly = std::vector<MPoly>;  // coefficients of x^0, x^1, ...

XPoly times_x_minus(const XPoly& p, const MPoly& b) {
  XPoly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= b * p[i];
  }
  return out;
}

MPoly pair_value(const XPoly& p, const XPoly& r, const std::vector<MPoly>& mu) {
  MPoly acc;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!p[i].is_zero() && !r[j].is_zero()) acc += p[i] * r[j] * mu[i + j];
  return acc;
}

}  // namespace

CheckResult ortho_check(Family f, int N) {
  if (N < 0 || N > kMaxOrthoN)
    throw Error(ErrorCode::InvalidArgument, "ortho_check: N must lie in [0, " + std::to_string(kMaxOrthoN) + "]");
  const WeightSystem sys = histoire_system(f);
  std::vector<MPoly> mu(static_cast<std::size_t>(2 * N + 1));
  for (int m = 0; m <= 2 * N; ++m) mu[static_cast<std::size_t>(m)] = gf_paths(sys, m);

  std::vector<XPoly> P{XPoly{MPoly(1)}};
  for (int n = 0; n < N; ++n) {
    XPoly next = times_x_minus(P.back(), ortho_b(f, n));
    if (n > 0) {
      const MPoly lam = ortho_lambda(f, n);
      const XPoly& prev = P[static_cast<std::size_t>(n - 1)];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= lam * prev[i];
    }
    P.push_back(std::move(next));
  }

  MPoly norm = 1;
  for (int i = 0; i <= N; ++i) {
    if (i > 0) norm *= ortho_lambda(f, i);
    for (int j = 0; j <= i; ++j) {
      const MPoly got = pair_value(P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(j)], mu);
      const MPoly want = i == j ? norm : MPoly();
      if (!(got == want))
        return {false, std::string(family_name(f)) + ": L(P_" + std::to_string(i) + " P_" + std::to_string(j) +
                           ") = " + got.to_string() + ", expected " + want.to_string()};
    }
  }
  return {};
}

CheckResult prefix_recurrence_check(int n_max, int k_max) {
  if (n_max < 0 || k_max < 0 || n_max > kMaxRecurrenceN || k_max > kMaxRecurrenceN)
    throw Error(ErrorCode::InvalidArgument,
                "prefix_recurrence_check: bounds must lie in [0, " + std::to_string(kMaxRecurrenceN) + "]");
  const MPoly c = MPoly::var(Var::c), d = MPoly::var(Var::d);
  auto p = [](int n, int k) { return (n < k || k < 0) ? MPoly() : prefix_count_trinomial(n, k); };
  auto fail = [](const char* which, int n, int k, const MPoly& v) {
    return CheckResult{false, std::string(which) + " recurrence at n=" + std::to_string(n) + ", k=" +
                                  std::to_string(k) + " leaves " + v.to_string()};
  };
  for (int k = 0; k <= k_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const MPoly lhs = (MPoly(4) * c - d * d) * MPoly((n + 1) * (n + 2)) * p(n, k) +
                        d * MPoly((n + 2) * (2 * n + 5)) * p(n + 1, k) -
                        MPoly((n + 2 - k) * (n + 4 + k)) * p(n + 2, k);
      if (!lhs.is_zero()) return fail("p_n", n, k, lhs);
      const MPoly rhs = MPoly((k + 3) * (k - n)) * p(n, k) + d * MPoly((k + 1) * (k + 3)) * p(n, k + 1) +
                        c * MPoly((k + 1) * (k + n + 4)) * p(n, k + 2);
      if (!rhs.is_zero()) return fail("q_k", n, k, rhs);
    }
  }
  return {};
}

}  // namespace qcross
