// One PASS/FAIL line per acceptance criterion, at the bounds each one states.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "formulas/checks.hpp"
#include "verify/sweeps.hpp"
#include "verify/verify.hpp"

using namespace qcross;

namespace {

constexpr Family kFamilies[] = {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: no time limit
  std::function<CheckResult()> run;
};

// Runs checks in order and stops at the first failure.
CheckResult all_of(const std::vector<std::function<CheckResult()>>& checks) {
  for (const auto& c : checks) {
    CheckResult r = c();
    if (!r.ok) return r;
  }
  return {};
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

CheckResult moment_range(Family f, int lo, int hi) {
  for (int n = lo; n <= hi; ++n) {
    CheckResult r = check_moment_routes(f, n, workers());
    if (!r.ok) return r;
  }
  return {};
}

template <class Fn>
CheckResult each_family(int lo, int hi, Fn fn) {
  for (Family f : kFamilies)
    for (int n = lo; n <= hi; ++n) {
      CheckResult r = fn(f, n);
      if (!r.ok) return r;
    }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Touchard-Riordan formula equals brute force over matchings, 1 <= n <= 8", 60,
       [] { return moment_range(Family::Hermite, 1, 8); }},
      {2, "Charlier crossing formula equals brute force for all k, 1 <= n <= 10", 60,
       [] { return moment_range(Family::Charlier, 1, 10); }},
      {3, "Charlier* formula equals brute force and Carlitz S[n,k], 1 <= n <= 10", 0,
       [] { return moment_range(Family::CharlierStar, 1, 10); }},
      {4, "Laguerre moment formula equals brute force over permutations, 1 <= n <= 8", 60,
       [] { return moment_range(Family::Laguerre, 1, 8); }},
      {5, "histoire bijections roundtrip and keep weights, n <= 7 (matchings 2n <= 12)", 0,
       [] {
         return each_family(0, 7, [](Family f, int n) {
           return (f == Family::Hermite && n > 6) ? CheckResult{} : check_bijection(f, n);
         });
       }},
      {6, "Penaud split/merge are mutual inverses (n <= 7) and gf(M_n) factorises (n <= 8)", 0,
       [] {
         return all_of({[] { return each_family(0, 7, check_penaud); },
                        [] { return each_family(0, 8, check_factorisation); }});
       }},
      {7, "specialised gf(M_n) equals (1-q)^n times the moment, n <= 7", 0,
       [] { return each_family(0, 7, check_specialisation); }},
      {8, "trinomial prefix count matches path DP and its specialisations, n <= 10", 0,
       [] {
         for (int n = 0; n <= 10; ++n) {
           CheckResult r = check_prefix_counts(n);
           if (!r.ok) return r;
         }
         return CheckResult{};
       }},
      {9, "four K-series routes agree to order 10; [t^k] K equals gf(M*_k), k <= 8", 0,
       [] {
         return all_of({[] {
                          for (Family f : kFamilies) {
                            CheckResult r = check_series_routes(f, 10);
                            if (!r.ok) return r;
                          }
                          return CheckResult{};
                        },
                        [] { return each_family(0, 8, check_series_coefficient); }});
       }},
      {10, "inverse pairs invert at size 12; Schroeder b_n, n <= 8; Laguerre pair, n <= 6", 0,
       [] {
         return all_of({[] { return check_triangles(12); },
                        [] {
                          for (int n = 0; n <= 8; ++n) {
                            CheckResult r = check_schroeder(n);
                            if (!r.ok) return r;
                          }
                          return CheckResult{};
                        },
                        [] { return check_laguerre_pair(6); }});
       }},
      {11, "theta is a sign-reversing involution on C_{j,k}, j+k <= 10, with the stated fixed sum and sample word", 0,
       [] {
         CheckResult sample = check_theta_sample();
         if (!sample.ok) return sample;
         for (int total = 0; total <= 10; ++total)
           for (int j = 0; 2 * j <= total; ++j) {
             CheckResult r = check_theta(j, total - j);
             if (!r.ok) return r;
           }
         return CheckResult{};
       }},
      {12, "both prefix-count recurrences vanish with symbolic c, d for n, k <= 10", 0,
       [] { return prefix_recurrence_check(10, 10); }},
      {13, "orthogonality L(P_i P_j) = 0 and L(P_i^2) = prod lambda for all families, i, j <= 5", 0,
       [] {
         for (Family f : kFamilies) {
           CheckResult r = ortho_check(f, 5);
           if (!r.ok) return r;
         }
         return CheckResult{};
       }},
      {14, "verify --suite all --max-n 6 gives identical reports at --jobs 1 and --jobs 8", 0,
       [] {
         const VerifyReport one = run_verify("all", 6, 1);
         const VerifyReport eight = run_verify("all", 6, 8);
         if (!one.ok()) return CheckResult{false, "suite failed: " + one.to_text(false)};
         if (one.to_json(false) != eight.to_json(false) || one.to_text(false) != eight.to_text(false))
           return CheckResult{false, "reports differ between worker counts"};
         return CheckResult{};
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.1fs, budget %.0fs", secs, c.budget_seconds);
      r = {false, buf};
    }
    std::printf("%s criterion %d: %s (%.2fs)\n", r.ok ? "PASS" : "FAIL", c.id, c.title, secs);
    if (!r.ok) {
      std::printf("  %s\n", r.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
