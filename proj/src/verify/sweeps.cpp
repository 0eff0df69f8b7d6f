#include "verify/sweeps.hpp"

#include <set>
#include <variant>

#include "algebra/qnumbers.hpp"
#include "decomp/core_word.hpp"
#include "decomp/penaud.hpp"
#include "error.hpp"
#include "formulas/closed_forms.hpp"
#include "formulas/inverse.hpp"
#include "formulas/kseries.hpp"
#include "objects/brute_gf.hpp"
#include "objects/enumerate.hpp"
#include "paths/specialization.hpp"
#include "paths/weight_system.hpp"

namespace qcross {
namespace {

CheckResult fail(const std::string& detail) { return {false, detail}; }

std::string mismatch(const std::string& what, const MPoly& got, const MPoly& want) {
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

// Records the first failure seen inside an enumeration callback.
struct FirstFailure {
  CheckResult result;
  void operator()(const std::string& detail) {
    if (result.ok) result = {false, detail};
  }
};

const MPoly kA = MPoly::var(Var::a), kB = MPoly::var(Var::b), kC = MPoly::var(Var::c), kD = MPoly::var(Var::d);

WeightSystem specialised_motzkin(Family f) {
  const auto s = specialization_of(f);
  return WeightSystem::motzkin(s.a, s.b, s.c, s.d);
}

MPoly sign(int e) { return e % 2 ? MPoly(-1) : MPoly(1); }

MPoly set_free_parameter(Family f, const MPoly& p) {
  const MPoly y1q = MPoly::var(Var::y) * (MPoly(1) - MPoly::var(Var::q));
  if (f == Family::Charlier) return p.substitute(Var::c, y1q);
  if (f == Family::CharlierStar) return p.substitute(Var::b, y1q);
  return p;
}

TruncSeries set_free_parameter(Family f, const TruncSeries& s) {
  std::vector<MPoly> co;
  for (std::uint32_t i = 0; i <= s.order(); ++i) co.push_back(set_free_parameter(f, s[i]));
  return TruncSeries(s.order(), std::move(co));
}

std::string series_mismatch(const std::string& what, const TruncSeries& got, const TruncSeries& want) {
  for (std::uint32_t i = 0; i <= want.order(); ++i)
    if (!(got[i] == want[i])) return mismatch(what + " [t^" + std::to_string(i) + "]", got[i], want[i]);
  return what;
}

}  // namespace

int brute_guard(Family f) noexcept {
  switch (f) {
    case Family::Hermite: return 8;
    case Family::Charlier:
    case Family::CharlierStar: return 11;
    case Family::Laguerre: return 9;
  }
  return 0;
}

CheckResult check_moment_routes(Family f, int n, unsigned jobs) {
  const std::string tag = std::string(family_name(f)) + " n=" + std::to_string(n);
  const MPoly brute = brute_gf(object_kind(f), n, object_weighting(f), jobs);
  const int len = specialization_of(f).path_length(f, n);
  const MPoly paths = gf_paths(histoire_system(f), len);
  if (!(paths == brute)) return fail(mismatch(tag + " path sum vs brute force", paths, brute));
  switch (f) {
    case Family::Hermite:
    case Family::Laguerre: {
      const MPoly closed = closed_form_moment(f, n);
      if (!(closed == brute)) return fail(mismatch(tag + " closed form vs brute force", closed, brute));
      break;
    }
    case Family::Charlier:
    case Family::CharlierStar:
      for (int k = 0; k <= n; ++k) {
        const MPoly want = brute.coeff_of(Var::y, static_cast<std::uint32_t>(k));
        const MPoly got = f == Family::Charlier ? charlier_crossings(n, k) : charlier_star(n, k);
        if (!(got == want)) return fail(mismatch(tag + " k=" + std::to_string(k) + " closed form vs brute force", got, want));
        if (f == Family::CharlierStar) {
          const MPoly s = q_stirling(n, k);
          if (!(s == want)) return fail(mismatch(tag + " k=" + std::to_string(k) + " q-Stirling vs brute force", s, want));
        }
      }
      break;
  }
  return {};
}

CheckResult check_bijection(Family f, int n) {
  FirstFailure failure;
  auto visit = [&](const CombObject& obj, const std::string& text) {
    if (!failure.result.ok) return;
    try {
      const WeightedPath p = histoire_of(obj, f);
      if (!histoire_system(f).admits(p, 0)) return failure(text + ": histoire " + p.to_compact() + " is not admissible");
      if (!(p.weight() == object_weight(obj, f)))
        return failure(text + ": " + mismatch("weight", p.weight(), object_weight(obj, f)));
      if (!(object_of(p, f) == obj)) return failure(text + ": roundtrip through " + p.to_compact() + " changed the object");
    } catch (const Error& e) {
      failure(text + ": " + e.what());
    }
  };
  switch (object_kind(f)) {
    case ObjectKind::Matching:
      for_each_matching(n, [&](const Matching& m) { visit(m, m.to_string()); });
      break;
    case ObjectKind::SetPartition:
      for_each_set_partition(n, [&](const SetPartition& s) { visit(s, s.to_string()); });
      break;
    case ObjectKind::Permutation:
      for_each_permutation(n, [&](const Permutation& s) { visit(s, s.to_string()); });
      break;
  }
  return failure.result;
}

CheckResult check_penaud(Family f, int n) {
  const WeightSystem m = specialised_motzkin(f);
  const WeightSystem pre = WeightSystem::prefix(m.c(), m.d());
  const WeightSystem star = WeightSystem::motzkin_star(m.a(), m.b(), m.c());
  FirstFailure failure;
  std::set<std::string> images;
  std::size_t count = 0;
  for_each_path(m, n, 0, [&](const WeightedPath& p) {
    ++count;
    if (!failure.result.ok) return;
    const std::string text = p.to_compact();
    try {
      const PenaudPair sp = penaud_split(p, m);
      if (!pre.admits(sp.prefix, sp.k())) return failure(text + ": prefix " + sp.prefix.to_compact() + " not in P_{n,k}");
      if (!star.admits(sp.core, 0)) return failure(text + ": core " + sp.core.to_compact() + " not in M*_k");
      if (!(sp.prefix.weight() * sp.core.weight() == p.weight())) return failure(text + ": split changes the weight");
      const WeightedPath back = penaud_merge(sp.prefix, sp.core);
      if (!(back == p)) return failure(text + ": merge gives " + back.to_compact());
      images.insert(sp.prefix.to_compact() + " | " + sp.core.to_compact());
    } catch (const Error& e) {
      failure(text + ": " + e.what());
    }
  });
  if (!failure.result.ok) return failure.result;
  if (images.size() != count) return fail("split is not injective at n=" + std::to_string(n));
  std::size_t pairs = 0;
  for (int k = 0; k <= n; ++k) {
    std::size_t prefixes = 0, cores = 0;
    for_each_path(pre, n, k, [&](const WeightedPath&) { ++prefixes; });
    for_each_path(star, k, 0, [&](const WeightedPath&) { ++cores; });
    pairs += prefixes * cores;
  }
  if (pairs != count)
    return fail("split is not onto at n=" + std::to_string(n) + ": " + std::to_string(count) + " paths, " +
                std::to_string(pairs) + " pairs");
  return {};
}

CheckResult check_factorisation(Family f, int n) {
  for (const WeightSystem& m : {WeightSystem::motzkin(kA, kB, kC, kD), specialised_motzkin(f)}) {
    MPoly rhs;
    for (int k = 0; k <= n; ++k)
      rhs += gf_paths(WeightSystem::prefix(m.c(), m.d()), n, k) *
             gf_paths(WeightSystem::motzkin_star(m.a(), m.b(), m.c()), k);
    const MPoly lhs = gf_paths(m, n);
    if (!(lhs == rhs)) return fail(mismatch(m.name() + " n=" + std::to_string(n), rhs, lhs));
  }
  return {};
}

CheckResult check_specialisation(Family f, int n) {
  const MPoly got = specialized_gf(f, n);
  const MPoly want = (MPoly(1) - MPoly::var(Var::q)).pow(static_cast<std::uint32_t>(n)) *
                     gf_paths(histoire_system(f), specialization_of(f).path_length(f, n));
  if (!(got == want)) return fail(mismatch(std::string(family_name(f)) + " n=" + std::to_string(n), got, want));
  return {};
}

CheckResult check_cfrac2(Family f, int k) {
  const auto s = specialization_of(f);
  FirstFailure failure;
  MPoly fixed_sum;
  for (const WeightSystem& fs : {WeightSystem::four_step(kA, kB, kC), WeightSystem::four_step(s.a, s.b, s.c)}) {
    const auto star = WeightSystem::motzkin_star(fs.a(), fs.b(), fs.c());
    fixed_sum = MPoly();
    for_each_path(fs, k, 0, [&](const WeightedPath& p) {
      if (!failure.result.ok) return;
      const WeightedPath img = cfrac2_involution(p, fs);
      const std::string text = fs.name() + " " + p.to_compact();
      if (!fs.admits(img, 0)) return failure(text + ": image " + img.to_compact() + " not admissible");
      if (!(cfrac2_involution(img, fs) == p)) return failure(text + ": not an involution");
      if (img == p) {
        if (!star.admits(p, 0)) return failure(text + ": fixed point outside M*_k");
        fixed_sum += p.weight();
      } else if (!(p.weight() + img.weight()).is_zero()) {
        return failure(text + ": image " + img.to_compact() + " does not reverse the sign");
      }
    });
    if (!failure.result.ok) return failure.result;
    const MPoly want = gf_paths(star, k);
    if (!(fixed_sum == want)) return fail(mismatch(fs.name() + " fixed points k=" + std::to_string(k), fixed_sum, want));
  }
  return {};
}

CheckResult check_prefix_counts(int n) {
  const MPoly c = kC, d = kD, y = MPoly::var(Var::y);
  const auto sys = WeightSystem::prefix(c, d);
  for (int k = 0; k <= n; ++k) {
    const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    const MPoly tri = prefix_count_trinomial(n, k);
    const MPoly dp = gf_paths(sys, n, k);
    if (!(tri == dp)) return fail(mismatch(tag + " trinomial vs path DP", tri, dp));
    const MPoly ballot = (n - k) % 2 ? MPoly() : MPoly(prefix_count_ballot(n, k));
    const MPoly at10 = tri.substitute(Var::c, MPoly(1)).substitute(Var::d, MPoly(0));
    if (!(at10 == ballot)) return fail(mismatch(tag + " (c,d)=(1,0) vs ballot", at10, ballot));
    const MPoly at01 = tri.substitute(Var::c, MPoly(0)).substitute(Var::d, MPoly(1));
    if (!(at01 == MPoly(binomial(n, k)))) return fail(mismatch(tag + " (c,d)=(0,1) vs C(n,k)", at01, MPoly(binomial(n, k))));
    const MPoly motz = prefix_gf_motzkin(n, k);
    const MPoly aty = tri.substitute(Var::c, y).substitute(Var::d, MPoly(1) + y);
    if (!(aty == motz)) return fail(mismatch(tag + " (c,d)=(y,1+y) vs Motzkin prefix form", aty, motz));
    const MPoly vdm = MPoly(binomial(2 * n, n - k) - binomial(2 * n, n - k - 2));
    if (!(motz.substitute(Var::y, MPoly(1)) == vdm)) return fail(mismatch(tag + " y=1", motz.substitute(Var::y, MPoly(1)), vdm));
    if (!(motz.substitute(Var::y, MPoly(0)) == MPoly(binomial(n, k))))
      return fail(mismatch(tag + " y=0", motz.substitute(Var::y, MPoly(0)), MPoly(binomial(n, k))));
  }
  return {};
}

CheckResult check_theta(int j, int k) {
  FirstFailure failure;
  MPoly fixed_sum, total;
  for_each_core_word(j, k, [&](const CoreWord& w) {
    if (!failure.result.ok) return;
    const std::string text = w.letters.empty() ? std::string("(empty)") : w.letters;
    try {
      const CoreWord t = theta(w);
      if (!in_C(t)) return failure(text + ": image " + t.letters + " not in C_{j,k}");
      if (!(theta(t) == w)) return failure(text + ": theta is not an involution here");
      total += w.weight();
      if (t == w) {
        fixed_sum += w.weight();
      } else if (!(w.weight() + t.weight()).is_zero()) {
        return failure(text + ": image " + t.letters + " does not reverse the sign");
      }
    } catch (const Error& e) {
      failure(text + ": " + e.what());
    }
  });
  if (!failure.result.ok) return failure.result;
  const MPoly want = sign(k) * q_pow(static_cast<std::uint32_t>(j * (j + 1) / 2)) * q_binomial(k, j);
  const std::string tag = "j=" + std::to_string(j) + " k=" + std::to_string(k);
  if (!(fixed_sum == want)) return fail(mismatch(tag + " fixed-point sum", fixed_sum, want));
  if (!(total == want)) return fail(mismatch(tag + " total sum", total, want));
  return {};
}

CheckResult check_theta_sample() {
  const CoreWord w = CoreWord::parse("xxYxzyxxYxxxxzyyYyyzY");
  if (!in_C(w)) return fail("sample word not in C_{9,12}: " + core_word_violation(w));
  if (!(w.weight() == -MPoly(q_pow(19)))) return fail(mismatch("sample word weight", w.weight(), -q_pow(19)));
  if (!(uv_stats(w) == UV{4, 2})) return fail("sample word (u,v) is not (4,2)");
  const CoreWord t = theta(w);
  if (t.letters != "xxYxzyxxYxxzyyxxYyYzY") return fail("sample word image is " + t.letters);
  if (!(uv_stats(t) == UV{2, 3})) return fail("sample image (u,v) is not (2,3)");
  if (!(t.weight() == q_pow(19))) return fail(mismatch("sample image weight", t.weight(), q_pow(19)));
  return {};
}

CheckResult check_series_routes(Family f, unsigned order) {
  const std::string tag = std::string(family_name(f)) + " order " + std::to_string(order);
  const TruncSeries closed = k_series_closed(f, order);
  for (bool symbolic : {true, false}) {
    const KParams p = k_family_params(f, symbolic);
    const TruncSeries want = symbolic ? closed : set_free_parameter(f, closed);
    const std::string kind = symbolic ? " symbolic" : " specialised";
    const TruncSeries cf = k_series_cf(p, order);
    if (!(cf == want)) return fail(series_mismatch(tag + kind + " continued fraction vs closed form", cf, want));
    const TruncSeries hyp = k_series_hypergeometric(p, order);
    if (!(hyp == want)) return fail(series_mismatch(tag + kind + " hypergeometric vs closed form", hyp, want));
    const TruncSeries fe = functional_equation_solve(p, order);
    if (!(fe == want)) return fail(series_mismatch(tag + kind + " functional equation vs closed form", fe, want));
  }
  return {};
}

CheckResult check_series_coefficient(Family f, int k) {
  const KParams p = k_family_params(f, true);
  const auto star = WeightSystem::motzkin_star(p.a, p.b, p.c);
  MPoly enumerated;
  for_each_path(star, k, 0, [&](const WeightedPath& w) { enumerated += w.weight(); });
  const MPoly coeff = k_series_cf(p, static_cast<std::uint32_t>(k))[static_cast<std::uint32_t>(k)];
  if (!(coeff == enumerated))
    return fail(mismatch(std::string(family_name(f)) + " [t^" + std::to_string(k) + "] vs M*_k paths", coeff, enumerated));
  return {};
}

CheckResult check_triangles(int size) {
  for (InversePair pair : {InversePair::Touchard, InversePair::Laguerre}) {
    const char* name = pair == InversePair::Touchard ? "touchard" : "laguerre";
    const Triangle fwd = pair_triangle(pair, PairDirection::Forward, static_cast<std::size_t>(size));
    const Triangle inv = pair_triangle(pair, PairDirection::Inverse, static_cast<std::size_t>(size));
    if (!(fwd * inv).is_identity() || !(inv * fwd).is_identity())
      return fail(std::string(name) + " triangles of size " + std::to_string(size) + " are not inverse");
  }
  return {};
}

CheckResult check_schroeder(int n) {
  const MPoly got = schroeder_b(n);
  const MPoly want = sign(n) * q_pow(static_cast<std::uint32_t>(n * (n + 1) / 2));
  if (!(got == want)) return fail(mismatch("schroeder_b(" + std::to_string(n) + ")", got, want));
  std::vector<MPoly> a;
  for (int m = 0; m <= 2 * n; ++m)
    a.push_back(m % 2 ? MPoly() : (MPoly(1) - MPoly::var(Var::q)).pow(static_cast<std::uint32_t>(m / 2)) * touchard_riordan(m / 2));
  const MPoly b = inverse_pair_apply(InversePair::Touchard, PairDirection::Inverse, a).back();
  if (!(b == got)) return fail(mismatch("touchard inverse pair b_" + std::to_string(2 * n), b, got));
  return {};
}

CheckResult check_laguerre_pair(int n_max) {
  const auto s = specialization_of(Family::Laguerre);
  const auto m = WeightSystem::motzkin(s.a, s.b, s.c, s.d);
  const auto star = WeightSystem::motzkin_star(s.a, s.b, s.c);
  std::vector<MPoly> a;
  for (int k = 0; k <= n_max; ++k) a.push_back(gf_paths(m, k));
  const auto b = inverse_pair_apply(InversePair::Laguerre, PairDirection::Inverse, a);
  for (int n = 0; n <= n_max; ++n) {
    const MPoly want = gf_paths(star, n);
    if (!(b[static_cast<std::size_t>(n)] == want))
      return fail(mismatch("laguerre pair b_" + std::to_string(n), b[static_cast<std::size_t>(n)], want));
  }
  const auto back = inverse_pair_apply(InversePair::Laguerre, PairDirection::Forward, b);
  if (!(back == a)) return fail("laguerre pair: forward after inverse is not the identity");
  return {};
}

CheckResult check_reconstruction(Family f, int n) {
  const Specialization s = specialization_of(f);
  const int len = s.path_length(f, n);
  const TruncSeries k = set_free_parameter(f, k_series_closed(f, static_cast<std::uint32_t>(len)));
  MPoly sum;
  for (int kk = 0; kk <= len; ++kk)
    sum += prefix_count_trinomial(len, kk).substitute(Var::c, s.c).substitute(Var::d, s.d) * k[static_cast<std::uint32_t>(kk)];
  const MPoly want = (MPoly(1) - MPoly::var(Var::q)).pow(static_cast<std::uint32_t>(n)) * closed_form_moment(f, n);
  if (!(sum == want)) return fail(mismatch(std::string(family_name(f)) + " n=" + std::to_string(n), sum, want));
  return {};
}

}  // namespace qcross
