#pragma once

#include "formulas/checks.hpp"
#include "paths/histoire.hpp"

namespace qcross {

/// Largest n for which brute_gf is allowed without --unsafe-n.
int brute_guard(Family f) noexcept;

/// Closed form == brute force == histoire path sum for moment n (per k for
/// the two set-partition families, plus Carlitz for Charlier*).
CheckResult check_moment_routes(Family f, int n, unsigned jobs = 1);

/// histoire_of / object_of roundtrip and weight preservation on every object
/// of size n (n arcs for matchings).
CheckResult check_bijection(Family f, int n);

/// Penaud split/merge on every path of M_n at the family's specialisation:
/// mutual inverses, weight-preserving, images in P_{n,k} x M*_k, and the pair
/// count equals the path count.
CheckResult check_penaud(Family f, int n);

/// gf(M_n) = sum_k gf(P_{n,k}) gf(M*_k) with symbolic a, b, c, d and at the
/// family's specialisation.
CheckResult check_factorisation(Family f, int n);

/// gf(M_n(params)) = (1-q)^n * moment.
CheckResult check_specialisation(Family f, int n);

/// The cfrac2 involution on the four-step paths of length k: involutive,
/// sign-reversing, fixed points exactly the M*_k paths.
CheckResult check_cfrac2(Family f, int k);

/// Trinomial count against the path DP and its four specialisations, for
/// every k <= n.
CheckResult check_prefix_counts(int n);

/// theta on C_{j,k}: involution, sign-reversing off its fixed points, fixed
/// sum (-1)^k q^{binom(j+1,2)} qbin(k,j).
CheckResult check_theta(int j, int k);
/// The sample word: weight -q^19, (u,v) = (4,2) -> (2,3).
CheckResult check_theta_sample();

/// The four K-series routes agree to `order`, symbolic and specialised.
CheckResult check_series_routes(Family f, unsigned order);
/// [t^k] K equals the exhaustive sum over M*_k.
CheckResult check_series_coefficient(Family f, int k);

/// Both triangle pairs are inverse to each other at the given size.
CheckResult check_triangles(int size);
/// schroeder_b(n) = (-1)^n q^{binom(n+1,2)} = Touchard inverse output b_{2n}.
CheckResult check_schroeder(int n);
/// Laguerre inverse pair maps gf(M_k) to gf(M*_n) for n <= n_max.
CheckResult check_laguerre_pair(int n_max);

/// Decomposition formula: sum_k gf(P_{n,k}) [t^k] K = (1-q)^n moment.
CheckResult check_reconstruction(Family f, int n);

}  // namespace qcross
