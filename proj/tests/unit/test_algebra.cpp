#include <doctest.h>

#include "algebra/mpoly.hpp"
#include "algebra/mpoly_json.hpp"
#include "algebra/qnumbers.hpp"
#include "algebra/series.hpp"
#include "error.hpp"
#include "test_support.hpp"

using namespace qcross;
using qcross::testing::P;

TEST_CASE("polynomial arithmetic") {
  CHECK((P("1 - q") * P("1 + q")) == P("1 - q^2"));
  CHECK((P("2 + q") * P("1 - q").pow(2)).to_string() == "2 - 3*q + q^3");
  CHECK(P("1 + 3*y + y^2").substitute(Var::y, 1) == MPoly(5));
  CHECK(-P("q - y") == P("y - q"));
  CHECK((P("q") - P("q")).is_zero());
}

TEST_CASE("canonical rendering") {
  CHECK(P("y^3 + y + 3y^2").to_string() == "y + 3*y^2 + y^3");
  CHECK(P("cq").to_string() == "q*c");
  CHECK(MPoly().to_string() == "0");
  CHECK(P("-abq").to_string() == "-q*a*b");
  CHECK(MPoly::parse(P("2 - 3*q + q^3 - 4*y*q^2*c").to_string()) == P("2 - 3*q + q^3 - 4*y*q^2*c"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(MPoly::parse("2 + * q"), Error);
  CHECK_THROWS_AS(MPoly::parse("x"), Error);
  try {
    MPoly::parse("q^");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("2 - 3*q + q^3"), P("1 - q").pow(2)) == P("2 + q"));
  CHECK(exact_div(P("y + q*c"), MPoly(1)) == P("y + q*c"));
  CHECK(exact_div(P("1 - q^2"), P("1 + q")) == P("1 - q"));
  try {
    exact_div(P("1 + q"), P("1 - q"));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
  CHECK_THROWS_AS(exact_div(P("q"), MPoly()), Error);
}

TEST_CASE("ring axioms and division on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const MPoly a = qcross::testing::random_poly(rng), b = qcross::testing::random_poly(rng),
                c = qcross::testing::random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("json roundtrip") {
  const MPoly p = P("-123456789012345678901234567890*q^2*y + 3*c - 1");
  const auto j = to_json(p);
  CHECK(mpoly_from_json(j) == p);
  CHECK(j["terms"][0]["coeff"].get<std::string>() == "-1");
  CHECK(to_json(MPoly())["terms"].empty());
}

TEST_CASE("q-integers and q-binomials") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == MPoly(1));
  CHECK(q_int(3) == P("1 + q + q^2"));
  CHECK(q_binomial(2, 1) == P("1 + q"));
  CHECK(q_binomial(5, 0) == MPoly(1));
  CHECK(q_binomial(4, 2) == P("1 + q + 2q^2 + q^3 + q^4"));
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const MPoly qb = q_binomial(n, k);
      CHECK(qb.substitute(Var::q, 1) == MPoly(binomial(n, k)));
      CHECK(qb == q_binomial(n, n - k));
      // product formula prod [n-k+i]/[i]
      MPoly num(1), den(1);
      for (int i = 1; i <= k; ++i) {
        num *= q_int(n - k + i);
        den *= q_int(i);
      }
      CHECK(exact_div(num, den) == qb);
    }
  }
}

TEST_CASE("q-Pochhammer") {
  const MPoly t = MPoly::var(Var::t);
  CHECK(q_pochhammer(t, 0) == MPoly(1));
  CHECK(q_pochhammer(t, 2) == P("1 - t - q*t + q*t^2"));
  const MPoly x = -(P("c") * P("q") * t);
  CHECK(q_pochhammer(x, 2) == P("1 + q*c*t + q^2*c*t + q^3*c^2*t^2"));
  CHECK(one_minus_q_pow(3) == P("1 - q").pow(3));
}

TEST_CASE("truncated series") {
  const auto inv = TruncSeries::from_poly(P("1 - a*t"), 2).invert();
  CHECK(inv.to_poly() == P("1 + a*t + a^2*t^2"));
  CHECK((TruncSeries::from_poly(P("1 + t"), 2) * TruncSeries::from_poly(P("1 - t"), 2)).to_poly() == P("1 - t^2"));
  CHECK(TruncSeries::from_poly(P("1 + t + t^2"), 2).compose_scale(1).to_poly() == P("1 + q*t + q^2*t^2"));
  CHECK_THROWS_AS(TruncSeries::from_poly(P("2 + t"), 3).invert(), Error);
  CHECK_THROWS_AS(TruncSeries(2, {MPoly(1), P("t"), MPoly()}), Error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MPoly> cs{MPoly(trial % 2 ? 1 : -1)};
    for (int i = 1; i <= 5; ++i) cs.push_back(qcross::testing::random_poly(rng, 2, 2));
    const TruncSeries u(5, cs);
    CHECK((u * u.invert()) == TruncSeries::one(5));
  }
}
