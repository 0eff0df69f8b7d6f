#include <doctest.h>

#include "algebra/qnumbers.hpp"
#include "error.hpp"
#include "objects/enumerate.hpp"
#include "paths/histoire.hpp"
#include "paths/path.hpp"
#include "paths/specialization.hpp"
#include "paths/weight_system.hpp"
#include "test_support.hpp"

using namespace qcross;
using qcross::testing::P;

namespace {

const char* kMatchingPath = "U(1) U(1) U(1) D(q) D(q) U(1) D(1) U(1) D(q) D(1)";
const char* kPartitionPath = "U(y) U(y) U(y) D(1) L(q) D(q) L(y) D(1)";
const char* kPartitionStarPath = "U(y) U(y) U(y) D(q^2) L(q) D(q^2) L(yq) D(1)";
const char* kPermutationPath = "U(y) U(yq) L(yq^2) D(q) L(y) L(1) L(yq) D(1)";

WeightedPath path(const char* text) { return WeightedPath::parse_compact(text); }

MPoly enumerated_sum(const WeightSystem& s, int n, int end) {
  MPoly total;
  for_each_path(s, n, end, [&](const WeightedPath& p) { total += p.weight(); });
  return total;
}

}  // namespace

TEST_CASE("compact and JSON path notation") {
  const auto p = path(kPermutationPath);
  CHECK(p.steps.size() == 8);
  CHECK(p.to_compact() == "U(y) U(q*y) L(q^2*y) D(q) L(y) L(1) L(q*y) D(1)");
  CHECK(WeightedPath::parse_compact(p.to_compact()) == p);
  CHECK(path_from_json(to_json(p)) == p);
  CHECK(parse_path_text(to_json(p).dump()) == p);
  CHECK(path("LL(-c) U(1)").length() == 3);
  CHECK_THROWS_AS(path("X(1)"), Error);
  CHECK_THROWS_AS(path("U(1"), Error);
}

TEST_CASE("histoires of the sample objects") {
  const auto m = Matching::parse("1-5,2-4,3-9,6-7,8-10");
  CHECK(histoire_of(m) == path(kMatchingPath));
  CHECK(histoire_of(m).weight() == P("q^3"));

  const auto part = SetPartition::parse("1 5 8|2 6|3 4|7");
  CHECK(histoire_of(part, false) == path(kPartitionPath));
  CHECK(path(kPartitionPath).weight() == P("y^4*q^2"));
  CHECK(histoire_of(part, true) == path(kPartitionStarPath));
  CHECK(path(kPartitionStarPath).weight() == P("y^4*q^6"));

  const auto s = Permutation::parse("3 4 7 1 5 2 8 6");
  CHECK(histoire_of(s) == path(kPermutationPath));
  CHECK(path(kPermutationPath).weight() == P("y^5*q^5"));
}

TEST_CASE("inverse bijections on the sample paths") {
  CHECK(std::get<Matching>(object_of(path(kMatchingPath), Family::Hermite)) == Matching::parse("1-5,2-4,3-9,6-7,8-10"));
  CHECK(std::get<SetPartition>(object_of(path(kPartitionPath), Family::Charlier)) == SetPartition::parse("1 5 8|2 6|3 4|7"));
  CHECK(std::get<SetPartition>(object_of(path(kPartitionStarPath), Family::CharlierStar)) ==
        SetPartition::parse("1 5 8|2 6|3 4|7"));
  CHECK(std::get<Permutation>(object_of(path(kPermutationPath), Family::Laguerre)) == Permutation::parse("3 4 7 1 5 2 8 6"));

  CHECK(std::get<Matching>(object_of(WeightedPath{}, Family::Hermite)).ground_size() == 0);
  CHECK(std::get<Permutation>(object_of(WeightedPath{}, Family::Laguerre)).size() == 0);
  CHECK(path("").weight() == MPoly(1));
  CHECK(path("U(1) L(1) D(1)").weight() == MPoly(1));
}

TEST_CASE("invalid histoires are rejected") {
  auto code_of = [](const WeightedPath& p, Family f) {
    try {
      object_of(p, f);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of(path("U(1) D(q)"), Family::Hermite) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("U(1) U(1) D(1)"), Family::Hermite) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("U(y) D(q)"), Family::Charlier) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("U(y) U(y) D(1) D(1)"), Family::CharlierStar) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("U(y) L(y) D(1)"), Family::CharlierStar) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("U(yq) D(1)"), Family::Laguerre) == ErrorCode::InvalidHistoire);
  CHECK(code_of(path("L(2y)"), Family::Laguerre) == ErrorCode::InvalidHistoire);
}

TEST_CASE("bijection roundtrips and weights") {
  for (int n = 0; n <= 6; ++n) {
    for_each_matching(n, [](const Matching& m) {
      const auto p = histoire_of(m);
      CHECK(p.length() == m.ground_size());
      CHECK(p.weight() == object_weight(m, Family::Hermite));
      CHECK(std::get<Matching>(object_of(p, Family::Hermite)) == m);
    });
  }
  for (int n = 0; n <= 7; ++n) {
    for_each_set_partition(n, [](const SetPartition& sp) {
      for (bool star : {false, true}) {
        const Family f = star ? Family::CharlierStar : Family::Charlier;
        const auto p = histoire_of(sp, star);
        CHECK(p.weight() == object_weight(sp, f));
        CHECK(std::get<SetPartition>(object_of(p, f)) == sp);
      }
    });
    for_each_permutation(n, [](const Permutation& s) {
      const auto p = histoire_of(s);
      CHECK(p.weight() == object_weight(s, Family::Laguerre));
      CHECK(std::get<Permutation>(object_of(p, Family::Laguerre)) == s);
    });
  }
}

TEST_CASE("every histoire comes from an object") {
  for (Family f : {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre}) {
    const int len = 6;
    const auto sys = histoire_system(f);
    std::size_t count = 0;
    for_each_path(sys, len, 0, [&](const WeightedPath& p) {
      ++count;
      CHECK(histoire_of(object_of(p, f), f) == p);
    });
    const std::size_t expect = f == Family::Hermite ? 15 : f == Family::Laguerre ? 720 : 203;
    CHECK(count == expect);
  }
}

TEST_CASE("moments by paths equal brute force") {
  CHECK(gf_paths(WeightSystem::hermite(), 4) == P("2 + q"));
  for (int n = 0; n <= 8; ++n) {
    CHECK(gf_paths(WeightSystem::charlier(), n) == brute_gf(ObjectKind::SetPartition, n, Weighting::BlocksCro));
    CHECK(gf_paths(WeightSystem::charlier_star(), n) ==
          brute_gf(ObjectKind::SetPartition, n, Weighting::BlocksCroStar));
  }
  for (int n = 0; n <= 7; ++n)
    CHECK(gf_paths(WeightSystem::hermite(), 2 * n) == brute_gf(ObjectKind::Matching, n, Weighting::Cro));
  CHECK(gf_paths(WeightSystem::hermite(), 5).is_zero());
  for (int n = 0; n <= 7; ++n)
    CHECK(gf_paths(WeightSystem::laguerre(), n) == brute_gf(ObjectKind::Permutation, n, Weighting::WexCro));
}

TEST_CASE("weight system examples") {
  const MPoly a = MPoly::var(Var::a), b = MPoly::var(Var::b), c = MPoly::var(Var::c), d = MPoly::var(Var::d);
  CHECK(gf_paths(WeightSystem::prefix(c, d), 2, 0) == P("d^2 + c"));
  CHECK(gf_paths(WeightSystem::motzkin_star(0, -1, c), 2, 0) == P("1 - q*c"));
  CHECK(enumerate_paths(WeightSystem::motzkin(0, 0, 1, 0), 2, 0).size() == 2);
  CHECK(enumerate_paths(WeightSystem::prefix(c, d), 2, 2).size() == 1);
  CHECK(enumerate_paths(WeightSystem::hermite(), 2, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_paths(WeightSystem::hermite(), 16, 0), Error);
  CHECK(WeightSystem::motzkin(a, b, c, d).menu(StepDir::Down, 0).empty());
  CHECK(WeightSystem::motzkin(0, 0, c, d).menu(StepDir::Down, 2).size() == 1);
}

TEST_CASE("DP agrees with exhaustive enumeration") {
  const MPoly a = MPoly::var(Var::a), b = MPoly::var(Var::b), c = MPoly::var(Var::c), d = MPoly::var(Var::d);
  const std::vector<WeightSystem> systems{
      WeightSystem::hermite(), WeightSystem::charlier(), WeightSystem::charlier_star(), WeightSystem::laguerre(),
      WeightSystem::motzkin(a, b, c, d), WeightSystem::motzkin_star(a, b, c), WeightSystem::prefix(c, d),
      WeightSystem::schroeder(), WeightSystem::four_step(a, b, c)};
  for (const auto& s : systems) {
    for (int n = 0; n <= 7; ++n) {
      CHECK_MESSAGE(gf_paths(s, n, 0) == enumerated_sum(s, n, 0), s.name() << " n=" << n);
      CHECK(gf_paths(s, n, kAnyHeight) == enumerated_sum(s, n, kAnyHeight));
    }
    CHECK(gf_paths(s, 8, 0) == enumerated_sum(s, 8, 0));
  }
}

TEST_CASE("enumerated paths respect the system rules") {
  const MPoly a = MPoly::var(Var::a), b = MPoly::var(Var::b), c = MPoly::var(Var::c), d = MPoly::var(Var::d);
  const auto mstar = WeightSystem::motzkin_star(a, b, c);
  for_each_path(mstar, 8, 0, [&](const WeightedPath& p) {
    CHECK(p.is_motzkin());
    CHECK(mstar.admits(p, 0));
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      CHECK(!(p.steps[i].dir == StepDir::Level && p.steps[i].weight == d));
      if (i + 1 < p.steps.size())
        CHECK(!(p.steps[i].dir == StepDir::Up && p.steps[i].weight == MPoly(1) &&
                p.steps[i + 1].dir == StepDir::Down && p.steps[i + 1].weight == c));
    }
  });
  for_each_path(WeightSystem::laguerre(), 7, kAnyHeight, [](const WeightedPath& p) { CHECK(p.stays_nonnegative()); });
}

TEST_CASE("specializations") {
  CHECK(specialized_gf(Family::Hermite, 2) == P("2 - 3*q + q^3"));
  CHECK(specialized_gf(Family::Laguerre, 2) == P("1 - q").pow(2) * P("y + y^2"));
  for (Family f : {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre}) {
    CHECK(specialized_gf(f, 0) == MPoly(1));
    for (int n = 0; n <= 6; ++n) CHECK_MESSAGE(check_specialization(f, n), family_name(f) << " n=" << n);
  }
}
