#include <doctest.h>

#include <set>

#include "algebra/qnumbers.hpp"
#include "decomp/core_word.hpp"
#include "decomp/penaud.hpp"
#include "error.hpp"
#include "paths/specialization.hpp"
#include "paths/weight_system.hpp"
#include "test_support.hpp"

using namespace qcross;
using qcross::testing::P;

namespace {

const char* kSampleWord = "xxYxzyxxYxxxxzyyYyyzY";
const char* kSampleImage = "xxYxzyxxYxxzyyxxYyYzY";

const MPoly A = MPoly::var(Var::a), B = MPoly::var(Var::b), C = MPoly::var(Var::c), D = MPoly::var(Var::d);

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

std::vector<WeightSystem> split_systems() {
  std::vector<WeightSystem> out;
  for (Family f : {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre}) {
    const auto s = specialization_of(f);
    out.push_back(WeightSystem::motzkin(s.a, s.b, s.c, s.d));
  }
  return out;
}

}  // namespace

TEST_CASE("Penaud split on small examples") {
  const auto m = WeightSystem::motzkin(A, B, C, D);
  // all primary and a Motzkin path: one factor, empty core
  const auto all_primary = WeightedPath::parse_compact("U(1) L(d) D(c) L(d)");
  const auto s1 = penaud_split(all_primary, m);
  CHECK(s1.prefix == all_primary);
  CHECK(s1.core.steps.empty());
  // nothing primary: all-up prefix, core = path
  const auto none = WeightedPath::parse_compact("U(-q) L(a*q + b*q) D(-a*b) L(a + b)");
  const auto s2 = penaud_split(none, m);
  CHECK(s2.prefix == WeightedPath::parse_compact("U(1) U(1) U(1) U(1)"));
  CHECK(s2.core == none);
  // U(1) U(-q^2) D(1) D(1) in M_4(0,0,1,0): only the inner U(-q^2) is not primary,
  // the first U(1) cannot start a Motzkin factor, and U(-q^2) D(1) isn't primary.
  const auto herm = WeightSystem::motzkin(0, 0, 1, 0);
  const auto p = WeightedPath::parse_compact("U(1) U(-q^2) D(1) D(1)");
  const auto s3 = penaud_split(p, herm);
  CHECK(s3.core == p);
  CHECK(s3.prefix == WeightedPath::parse_compact("U(1) U(1) U(1) U(1)"));
  CHECK(penaud_merge(s3.prefix, s3.core) == p);

  const auto q = WeightedPath::parse_compact("U(-q) U(1) D(1) D(1)");
  const auto s4 = penaud_split(q, herm);
  CHECK(s4.prefix == WeightedPath::parse_compact("U(1) U(1) D(1) U(1)"));
  CHECK(s4.core == WeightedPath::parse_compact("U(-q) D(1)"));

  CHECK(code_of([&] { penaud_split(WeightedPath::parse_compact("U(1) D(2)"), herm); }) == ErrorCode::InvalidPath);
}

TEST_CASE("Penaud merge") {
  CHECK(penaud_merge(WeightedPath{}, WeightedPath{}).steps.empty());
  const auto core = WeightedPath::parse_compact("U(-q) L(a) D(-a*b)");
  CHECK(penaud_merge(WeightedPath::parse_compact("U(1) U(1) U(1)"), core) == core);
  CHECK(code_of([&] { penaud_merge(WeightedPath::parse_compact("U(1) U(1)"), core); }) == ErrorCode::HeightMismatch);
  CHECK(penaud_merge(WeightedPath::parse_compact("U(1) U(1) D(c) U(1) L(d) U(1)"), core) ==
        WeightedPath::parse_compact("U(-q) U(1) D(c) L(a) L(d) D(-a*b)"));
}

TEST_CASE("Penaud decomposition is a weight-preserving bijection") {
  auto check_system = [](const WeightSystem& m, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      std::set<std::string> images;
      std::size_t count = 0;
      for_each_path(m, n, 0, [&](const WeightedPath& p) {
        ++count;
        const auto sp = penaud_split(p, m);
        CHECK(sp.prefix.weight() * sp.core.weight() == p.weight());
        CHECK(sp.prefix.final_height() == sp.k());
        CHECK(sp.prefix.length() == n);
        CHECK(WeightSystem::prefix(m.c(), m.d()).admits(sp.prefix, sp.k()));
        CHECK(WeightSystem::motzkin_star(m.a(), m.b(), m.c()).admits(sp.core, 0));
        CHECK(penaud_merge(sp.prefix, sp.core) == p);
        images.insert(sp.prefix.to_compact() + " | " + sp.core.to_compact());
      });
      CHECK(images.size() == count);
      // Every (prefix, core) pair is reached: counts match.
      std::size_t pairs = 0;
      for (int k = 0; k <= n; ++k)
        pairs += enumerate_paths(WeightSystem::prefix(m.c(), m.d()), n, k).size() *
                 enumerate_paths(WeightSystem::motzkin_star(m.a(), m.b(), m.c()), k, 0).size();
      CHECK(pairs == count);
    }
  };
  for (const auto& m : split_systems()) check_system(m, 7);
  check_system(WeightSystem::motzkin(A, B, C, D), 5);
}

TEST_CASE("merge then split is the identity") {
  const auto m = WeightSystem::motzkin(A, B, C, D);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& prefix : enumerate_paths(WeightSystem::prefix(C, D), n, k)) {
        for_each_path(WeightSystem::motzkin_star(A, B, C), k, 0, [&](const WeightedPath& core) {
          const auto p = penaud_merge(prefix, core);
          CHECK(m.admits(p, 0));
          CHECK(penaud_split(p, m) == PenaudPair{prefix, core});
        });
      }
    }
  }
}

TEST_CASE("generating-function factorisation") {
  std::vector<WeightSystem> systems = split_systems();
  systems.push_back(WeightSystem::motzkin(A, B, C, D));
  for (const auto& m : systems) {
    for (int n = 0; n <= 8; ++n) {
      MPoly rhs;
      for (int k = 0; k <= n; ++k)
        rhs += gf_paths(WeightSystem::prefix(m.c(), m.d()), n, k) *
               gf_paths(WeightSystem::motzkin_star(m.a(), m.b(), m.c()), k, 0);
      CHECK_MESSAGE(gf_paths(m, n, 0) == rhs, m.name() << " n=" << n);
    }
  }
}

TEST_CASE("cfrac2 involution") {
  const auto fs = WeightSystem::four_step(A, B, C);
  const auto fixed = WeightedPath::parse_compact("U(-q) D(c)");
  CHECK(cfrac2_involution(fixed, fs) == fixed);
  const auto dl = WeightedPath::parse_compact("LL(-c)");
  CHECK(cfrac2_involution(dl, fs) == WeightedPath::parse_compact("U(1) D(c)"));
  CHECK(cfrac2_involution(WeightedPath::parse_compact("U(1) D(c)"), fs) == dl);

  std::vector<WeightSystem> systems{fs};
  for (Family f : {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre}) {
    const auto s = specialization_of(f);
    systems.push_back(WeightSystem::four_step(s.a, s.b, s.c));
  }
  for (const auto& sys : systems) {
    const auto mstar = WeightSystem::motzkin_star(sys.a(), sys.b(), sys.c());
    for (int k = 0; k <= 8; ++k) {
      MPoly fixed_sum, total;
      for_each_path(sys, k, 0, [&](const WeightedPath& p) {
        const auto img = cfrac2_involution(p, sys);
        total += p.weight();
        CHECK(cfrac2_involution(img, sys) == p);
        CHECK(sys.admits(img, 0));
        if (img == p) {
          CHECK(mstar.admits(p, 0));
          fixed_sum += p.weight();
        } else {
          CHECK((p.weight() + img.weight()).is_zero());
        }
      });
      CHECK(fixed_sum == gf_paths(mstar, k, 0));
      CHECK(total == gf_paths(mstar, k, 0));
      CHECK(gf_paths(sys, k, 0) == gf_paths(mstar, k, 0));
    }
  }
}

TEST_CASE("core words") {
  const auto w = CoreWord::parse(kSampleWord);
  CHECK(w.j() == 9);
  CHECK(w.k() == 12);
  CHECK(in_C(w));
  CHECK(w.weight() == P("-q^19"));
  CHECK(w.to_path().weight() == P("-q^19"));
  CHECK(uv_stats(w) == UV{4, 2});
  CHECK(uv_stats(CoreWord::parse("xxxzz")) == UV{3, 3});
  CHECK(uv_stats(CoreWord::parse("xyxY")) == UV{1, 2});
  CHECK(!in_C(CoreWord::parse("xyxY")));
  CHECK(!in_C(CoreWord::parse("Y")));
  CHECK(!in_C(CoreWord::parse("xz")));
  CHECK_THROWS_AS(CoreWord::parse("xa"), Error);
}

TEST_CASE("theta on the sample word") {
  const auto w = CoreWord::parse(kSampleWord);
  const auto img = theta(w);
  CHECK(img.to_string() == kSampleImage);
  CHECK(img.weight() == P("q^19"));
  CHECK(uv_stats(img) == UV{2, 3});
  CHECK(theta(img) == w);
  const auto fixed = CoreWord::parse("xxxzYzYY");
  CHECK(theta(fixed) == fixed);
  CHECK(code_of([] { theta(CoreWord::parse("xyxY")); }) == ErrorCode::NotInC);
}

TEST_CASE("theta is a sign-reversing involution with the stated fixed points") {
  for (int total = 0; total <= 10; ++total) {
    for (int j = 0; 2 * j <= total; ++j) {
      const int k = total - j;
      MPoly fixed_sum, shape_sum, total_sum;
      for_each_core_word(j, k, [&](const CoreWord& c) {
        REQUIRE(in_C(c));
        const auto t = theta(c);
        CHECK(in_C(t));
        CHECK(t.j() == j);
        CHECK(t.k() == k);
        CHECK(theta(t) == c);
        const auto uv = uv_stats(c);
        const bool fixed_shape = c.letters.substr(0, static_cast<std::size_t>(j)) == std::string(j, 'x') &&
                                 c.letters.find('y') == std::string::npos;
        total_sum += c.weight();
        if (fixed_shape) {
          CHECK(uv == UV{j, j});
          shape_sum += c.weight();
        }
        if (uv.u == j && uv.v == j) {
          CHECK(t == c);
          fixed_sum += c.weight();
        } else {
          CHECK((c.weight() + t.weight()).is_zero());
          const auto tuv = uv_stats(t);
          CHECK((uv.v <= uv.u) == (tuv.u < tuv.v));
        }
      });
      const MPoly sign = k % 2 ? MPoly(-1) : MPoly(1);
      const MPoly expect = sign * q_pow(static_cast<std::uint32_t>(j * (j + 1) / 2)) * q_binomial(k, j);
      // Words such as zxY have u = v = j without starting with x^j; they are
      // fixed too, and their weights cancel among themselves.
      CHECK(shape_sum == expect);
      CHECK(fixed_sum == expect);
      CHECK(total_sum == expect);
    }
  }
}
