#include <random>

#include "algebra/qnumbers.hpp"
#include "error.hpp"
#include "formulas/checks.hpp"
#include "formulas/closed_forms.hpp"
#include "formulas/inverse.hpp"
#include "formulas/kseries.hpp"
#include "objects/brute_gf.hpp"
#include "paths/specialization.hpp"
#include "paths/weight_system.hpp"
#include "test_support.hpp"

using namespace qcross;
using qcross::testing::P;

namespace {

constexpr Family kFamilies[] = {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre};

MPoly brute_moment(Family f, int n) { return brute_gf(object_kind(f), n, object_weighting(f)); }

MPoly one_minus_q_to(int n) { return (MPoly(1) - MPoly::var(Var::q)).pow(static_cast<std::uint32_t>(n)); }

// Sets the symbolic free parameter of the family to y(1-q).
MPoly specialise(Family f, const MPoly& p) {
  const MPoly y1q = P("y - y*q");
  if (f == Family::Charlier) return p.substitute(Var::c, y1q);
  if (f == Family::CharlierStar) return p.substitute(Var::b, y1q);
  return p;
}

TruncSeries specialise(Family f, const TruncSeries& s) {
  std::vector<MPoly> co;
  for (std::uint32_t i = 0; i <= s.order(); ++i) co.push_back(specialise(f, s[i]));
  return TruncSeries(s.order(), std::move(co));
}

}  // namespace

TEST_CASE("closed forms: examples") {
  CHECK(touchard_riordan(0) == P("1"));
  CHECK(touchard_riordan(1) == P("1"));
  CHECK(touchard_riordan(2) == P("2 + q"));
  CHECK(touchard_riordan(3) == P("5 + 6*q + 3*q^2 + q^3"));
  CHECK(charlier_crossings(3, 2) == P("3"));
  CHECK(charlier_crossings(4, 2) == P("6 + q"));
  CHECK(charlier_star(3, 2) == P("2 + q"));
  CHECK(charlier_star(4, 4) == P("1"));
  CHECK(laguerre_moment(1) == P("y"));
  CHECK(laguerre_moment(2) == P("y + y^2"));
  CHECK(laguerre_moment(3) == P("y^3 + 3*y^2 + q*y^2 + y"));
  CHECK(q_stirling(3, 2) == P("2 + q"));
  for (int n = 0; n <= 6; ++n) CHECK(q_stirling(n, n) == P("1"));
  CHECK_THROWS_AS(charlier_crossings(2, 3), Error);
}

TEST_CASE("closed forms equal brute force") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(touchard_riordan(n) == brute_moment(Family::Hermite, n));
    CHECK(closed_form_moment(Family::Charlier, n) == brute_moment(Family::Charlier, n));
    const MPoly star = brute_moment(Family::CharlierStar, n);
    CHECK(closed_form_moment(Family::CharlierStar, n) == star);
    MPoly stirling;
    for (int k = 0; k <= n; ++k) stirling += q_stirling(n, k) * MPoly::var(Var::y, static_cast<std::uint32_t>(k));
    CHECK(stirling == star);
    CHECK(laguerre_moment(n) == brute_moment(Family::Laguerre, n));
  }
}

TEST_CASE("closed forms at the formula guard stay exact") {
  const MPoly t = touchard_riordan(40);
  CHECK(t.substitute(Var::q, MPoly(0)) == MPoly(binomial(80, 40) / 41));  // Catalan at q=0
  BigInt odd_factorial = 1;
  for (int i = 1; i < 80; i += 2) odd_factorial *= i;
  CHECK(t.substitute(Var::q, MPoly(1)) == MPoly(odd_factorial));
}

TEST_CASE("prefix counts") {
  CHECK(prefix_count_trinomial(2, 0) == P("d^2 + c"));
  CHECK(prefix_count_ballot(4, 2) == 3);
  CHECK(prefix_count_ballot(6, 0) == 5);
  CHECK_THROWS_AS(prefix_count_ballot(3, 0), Error);
  try {
    prefix_count_ballot(5, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityMismatch);
  }
  CHECK(prefix_gf_motzkin(2, 0) == P("1 + 3*y + y^2"));
  CHECK(prefix_gf_motzkin(3, 1).substitute(Var::y, MPoly(1)) == MPoly(14));

  const MPoly c = MPoly::var(Var::c), d = MPoly::var(Var::d), y = MPoly::var(Var::y);
  const auto sys = WeightSystem::prefix(c, d);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const MPoly tri = prefix_count_trinomial(n, k);
      CHECK(tri == gf_paths(sys, n, k));
      CHECK(prefix_count_trinomial(n, n) == P("1"));
      const MPoly at10 = tri.substitute(Var::c, MPoly(1)).substitute(Var::d, MPoly(0));
      CHECK(at10 == ((n - k) % 2 ? MPoly() : MPoly(prefix_count_ballot(n, k))));
      CHECK(tri.substitute(Var::c, MPoly(0)).substitute(Var::d, MPoly(1)) == MPoly(binomial(n, k)));
      const MPoly motz = prefix_gf_motzkin(n, k);
      CHECK(tri.substitute(Var::c, y).substitute(Var::d, MPoly(1) + y) == motz);
      CHECK(motz.substitute(Var::y, MPoly(1)) == MPoly(binomial(2 * n, n - k) - binomial(2 * n, n - k - 2)));
      CHECK(motz.substitute(Var::y, MPoly(0)) == MPoly(binomial(n, k)));
    }
  }
}

TEST_CASE("K series: examples") {
  const KParams herm{0, 0, 1};
  CHECK(k_series_cf(herm, 6).to_poly() == P("1 - q*t^2 + q^3*t^4 - q^6*t^6"));
  CHECK(k_series_cf(KParams{0, -1, P("c")}, 4)[2] == P("1 - c*q"));
  CHECK(k_series_cf(KParams{-1, P("-y*q"), P("y")}, 4)[2] == P("1 + y*q^2 + y^2*q^2"));
  CHECK(k_series_closed(Family::Charlier, 4)[3] == P("-1 + c*q + c*q^2"));
  CHECK(k_series_closed(Family::CharlierStar, 4)[1] == P("b - 1"));
  CHECK(k_series_closed(Family::Laguerre, 4)[0] == P("1"));
  CHECK(k_series_hypergeometric(herm, 4).to_poly() == P("1 - q*t^2 + q^3*t^4"));
  CHECK(k_series_hypergeometric(herm, 0).to_poly() == P("1"));
  CHECK(functional_equation_solve(herm, 4).to_poly() == P("1 - q*t^2 + q^3*t^4"));
  CHECK(functional_equation_solve(KParams{P("a"), P("b"), P("c")}, 0).to_poly() == P("1"));
  CHECK(functional_equation_solve(KParams{0, -1, P("c")}, 2)[2] == P("1 - c*q"));
  CHECK_THROWS_AS(k_series_cf(KParams{P("t"), 0, 0}, 2), Error);
}

TEST_CASE("K series: four routes agree") {
  const std::uint32_t order = 8;
  for (Family f : kFamilies) {
    CAPTURE(family_name(f));
    const KParams sym = k_family_params(f, true);
    const TruncSeries closed = k_series_closed(f, order);
    CHECK(k_series_cf(sym, order) == closed);
    CHECK(k_series_hypergeometric(sym, order) == closed);
    CHECK(functional_equation_solve(sym, order) == closed);

    const KParams spec = k_family_params(f, false);
    const TruncSeries closed_spec = specialise(f, closed);
    CHECK(k_series_cf(spec, order) == closed_spec);
    CHECK(k_series_hypergeometric(spec, order) == closed_spec);
    CHECK(functional_equation_solve(spec, order) == closed_spec);
  }
}

TEST_CASE("K series coefficients count reduced cores") {
  for (Family f : kFamilies) {
    CAPTURE(family_name(f));
    const KParams sym = k_family_params(f, true);
    const TruncSeries cf = k_series_cf(sym, 7);
    const auto star = WeightSystem::motzkin_star(sym.a, sym.b, sym.c);
    for (std::uint32_t k = 0; k <= 7; ++k) {
      CAPTURE(k);
      CHECK(cf[k] == gf_paths(star, static_cast<int>(k)));
      MPoly enumerated;
      if (k <= 6)
        for_each_path(star, static_cast<int>(k), 0, [&](const WeightedPath& p) { enumerated += p.weight(); });
      if (k <= 6) CHECK(cf[k] == enumerated);
    }
  }
}

TEST_CASE("decomposition formula reconstruction") {
  for (Family f : kFamilies) {
    CAPTURE(family_name(f));
    const Specialization s = specialization_of(f);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      const int len = s.path_length(f, n);
      const TruncSeries k = specialise(f, k_series_closed(f, static_cast<std::uint32_t>(len)));
      MPoly sum;
      for (int kk = 0; kk <= len; ++kk)
        sum += prefix_count_trinomial(len, kk).substitute(Var::c, s.c).substitute(Var::d, s.d) *
               k[static_cast<std::uint32_t>(kk)];
      CHECK(sum == one_minus_q_to(n) * closed_form_moment(f, n));
    }
  }
}

TEST_CASE("inverse pairs") {
  for (InversePair pair : {InversePair::Touchard, InversePair::Laguerre}) {
    const Triangle fwd = pair_triangle(pair, PairDirection::Forward, 12);
    const Triangle inv = pair_triangle(pair, PairDirection::Inverse, 12);
    CHECK((fwd * inv).is_identity());
    CHECK((inv * fwd).is_identity());
    const Triangle generic = fwd.inverse();
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j <= i; ++j) CHECK(generic.at(i, j) == inv.at(i, j));
  }

  // a_{2n} = (1-q)^n mu_{2n}, odd terms 0.
  std::vector<MPoly> a;
  for (int n = 0; n < 10; ++n) a.push_back(n % 2 ? MPoly() : one_minus_q_to(n / 2) * touchard_riordan(n / 2));
  CHECK(a[4] == one_minus_q_to(2) * P("2 + q"));
  const auto b = inverse_pair_apply(InversePair::Touchard, PairDirection::Inverse, a);
  CHECK(b[2] == P("-q"));
  for (int n = 0; n < 10; ++n) {
    CAPTURE(n);
    const MPoly want = n % 2 ? MPoly() : MPoly((n / 2) % 2 ? -1 : 1) * q_pow(static_cast<std::uint32_t>(n / 2 * (n / 2 + 1) / 2));
    CHECK(b[static_cast<std::size_t>(n)] == want);
    if (n % 2 == 0) CHECK(b[static_cast<std::size_t>(n)] == schroeder_b(n / 2));
  }

  std::mt19937 rng(7);
  for (InversePair pair : {InversePair::Touchard, InversePair::Laguerre}) {
    std::vector<MPoly> seq;
    for (int i = 0; i < 8; ++i) seq.push_back(qcross::testing::random_poly(rng));
    CHECK(inverse_pair_apply(pair, PairDirection::Inverse, inverse_pair_apply(pair, PairDirection::Forward, seq)) == seq);
  }

  const MPoly y = MPoly::var(Var::y);
  const auto m = WeightSystem::motzkin(MPoly(-1), -(y * MPoly::var(Var::q)), y, MPoly(1) + y);
  const auto ms = WeightSystem::motzkin_star(MPoly(-1), -(y * MPoly::var(Var::q)), y);
  std::vector<MPoly> lag;
  for (int k = 0; k <= 6; ++k) lag.push_back(gf_paths(m, k));
  const auto lb = inverse_pair_apply(InversePair::Laguerre, PairDirection::Inverse, lag);
  for (int n = 0; n <= 6; ++n) CHECK(lb[static_cast<std::size_t>(n)] == gf_paths(ms, n));
}

TEST_CASE("schroeder_b") {
  CHECK(schroeder_b(0) == P("1"));
  CHECK(schroeder_b(1) == P("-q"));
  CHECK(schroeder_b(2) == P("q^3"));
  for (int n = 0; n <= 8; ++n)
    CHECK(schroeder_b(n) == MPoly(n % 2 ? -1 : 1) * q_pow(static_cast<std::uint32_t>(n * (n + 1) / 2)));
}

TEST_CASE("orthogonality") {
  for (Family f : kFamilies) {
    CAPTURE(family_name(f));
    const CheckResult r = ortho_check(f, 5);
    CHECK_MESSAGE(r.ok, r.detail);
  }
  CHECK(ortho_lambda(Family::Laguerre, 1) * ortho_lambda(Family::Laguerre, 2) == P("y^2 + 2*q*y^2 + q^2*y^2"));
  CHECK_THROWS_AS(ortho_check(Family::Hermite, 7), Error);
}

TEST_CASE("holonomic recurrences of the prefix count") {
  const CheckResult r = prefix_recurrence_check(10, 10);
  CHECK_MESSAGE(r.ok, r.detail);
  CHECK(prefix_recurrence_check(0, 0).ok);
}
