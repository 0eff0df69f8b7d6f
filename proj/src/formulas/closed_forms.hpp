#pragma once

#include "algebra/mpoly.hpp"
#include "paths/histoire.hpp"

namespace qcross {

/// Largest n accepted by the closed-form evaluators behind the CLI guard.
inline constexpr int kMaxFormulaN = 200;

MPoly touchard_riordan(int n);
/// Sum of q^cro over set partitions of {1..n} with k blocks.
MPoly charlier_crossings(int n, int k);
/// Sum of q^cro* over set partitions of {1..n} with k blocks.
MPoly charlier_star(int n, int k);
MPoly laguerre_moment(int n);
/// Carlitz: S[n,k] = S[n-1,k-1] + [k]_q S[n-1,k].
MPoly q_stirling(int n, int k);

/// Full moment of the family from its closed form, as a polynomial in q, y.
/// Hermite gives the 2n-th moment.
MPoly closed_form_moment(Family f, int n);

/// |P_{n,k}(c,d)| with symbolic c and d.
MPoly prefix_count_trinomial(int n, int k);
/// Left factors of Dyck paths of length n ending at height k; throws
/// ParityMismatch when n-k is odd.
BigInt prefix_count_ballot(int n, int k);
/// |P_{n,k}(y,1+y)| as a polynomial in y.
MPoly prefix_gf_motzkin(int n, int k);

}  // namespace qcross
