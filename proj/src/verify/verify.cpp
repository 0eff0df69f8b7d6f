#include "verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "error.hpp"
#include "verify/sweeps.hpp"

namespace qcross {
namespace {

using Clock = std::chrono::steady_clock;

constexpr Family kFamilies[] = {Family::Hermite, Family::Charlier, Family::CharlierStar, Family::Laguerre};

std::string label(Family f, const char* var, int v) {
  return std::string(family_name(f)) + " " + var + "=" + std::to_string(v);
}

void add(std::vector<VerifyCase>& out, const char* suite, std::string name, std::function<CheckResult()> fn) {
  out.push_back(VerifyCase{suite, std::move(name), std::move(fn)});
}

void moment_routes(std::vector<VerifyCase>& out, int max_n) {
  for (Family f : kFamilies)
    for (int n = 1; n <= std::min(max_n, brute_guard(f)); ++n)
      add(out, "theorems", label(f, "n", n), [f, n] { return check_moment_routes(f, n); });
}

void bijections(std::vector<VerifyCase>& out, int max_n) {
  for (Family f : kFamilies) {
    const int cap = f == Family::Hermite ? 6 : 7;
    for (int n = 0; n <= std::min(max_n, cap); ++n)
      add(out, "bijections", label(f, "n", n), [f, n] { return check_bijection(f, n); });
  }
}

void decomposition(std::vector<VerifyCase>& out, int max_n) {
  for (Family f : kFamilies) {
    for (int n = 0; n <= std::min(max_n, 7); ++n)
      add(out, "decomposition", "penaud " + label(f, "n", n), [f, n] { return check_penaud(f, n); });
    for (int n = 0; n <= std::min(max_n, 8); ++n)
      add(out, "decomposition", "factorisation " + label(f, "n", n), [f, n] { return check_factorisation(f, n); });
    for (int n = 0; n <= std::min(max_n, 7); ++n)
      add(out, "decomposition", "specialisation " + label(f, "n", n), [f, n] { return check_specialisation(f, n); });
    for (int k = 0; k <= std::min(max_n, 8); ++k)
      add(out, "decomposition", "cfrac2 " + label(f, "k", k), [f, k] { return check_cfrac2(f, k); });
    for (int n = 1; n <= std::min(max_n, 8); ++n)
      add(out, "decomposition", "reconstruction " + label(f, "n", n), [f, n] { return check_reconstruction(f, n); });
  }
  for (int n = 0; n <= std::min(max_n, 10); ++n)
    add(out, "decomposition", "prefix counts n=" + std::to_string(n), [n] { return check_prefix_counts(n); });
  add(out, "decomposition", "theta sample word", [] { return check_theta_sample(); });
  for (int total = 0; total <= std::min(max_n, 10); ++total)
    for (int j = 0; 2 * j <= total; ++j) {
      const int k = total - j;
      add(out, "decomposition", "theta j=" + std::to_string(j) + " k=" + std::to_string(k),
          [j, k] { return check_theta(j, k); });
    }
}

void series(std::vector<VerifyCase>& out, int max_n) {
  const auto order = static_cast<unsigned>(std::min(max_n, 10));
  for (Family f : kFamilies) {
    add(out, "series", "routes " + label(f, "order", static_cast<int>(order)),
        [f, order] { return check_series_routes(f, order); });
    for (int k = 0; k <= std::min(max_n, 8); ++k)
      add(out, "series", "coefficient " + label(f, "k", k), [f, k] { return check_series_coefficient(f, k); });
  }
}

void inverse(std::vector<VerifyCase>& out, int max_n) {
  const int size = std::min(max_n, 12);
  add(out, "inverse", "triangles size=" + std::to_string(size), [size] { return check_triangles(size); });
  for (int n = 0; n <= std::min(max_n, 8); ++n)
    add(out, "inverse", "schroeder n=" + std::to_string(n), [n] { return check_schroeder(n); });
  const int lag = std::min(max_n, 6);
  add(out, "inverse", "laguerre pair n<=" + std::to_string(lag), [lag] { return check_laguerre_pair(lag); });
}

void orthogonality(std::vector<VerifyCase>& out, int max_n) {
  const int N = std::min(max_n, kMaxOrthoN);
  for (Family f : kFamilies) add(out, "orthogonality", label(f, "N", N), [f, N] { return ortho_check(f, N); });
}

void prefix_recurrences(std::vector<VerifyCase>& out, int max_n) {
  const int b = std::min(max_n, kMaxRecurrenceN);
  add(out, "appendixC", "recurrences n,k<=" + std::to_string(b), [b] { return prefix_recurrence_check(b, b); });
}

const char* status_name(CaseStatus s) { return s == CaseStatus::Pass ? "PASS" : "FAIL"; }

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"theorems", "bijections",    "decomposition", "series",
                                              "inverse",  "orthogonality", "appendixC",     "all"};
  return names;
}

bool is_verify_suite(std::string_view name) {
  const auto& names = verify_suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerifyCase> verify_cases(std::string_view suite, int max_n) {
  if (!is_verify_suite(suite)) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  if (max_n < 0) throw Error(ErrorCode::InvalidArgument, "--max-n must be nonnegative");
  std::vector<VerifyCase> out;
  const bool all = suite == "all";
  if (all || suite == "theorems") moment_routes(out, max_n);
  if (all || suite == "bijections") bijections(out, max_n);
  if (all || suite == "decomposition") decomposition(out, max_n);
  if (all || suite == "series") series(out, max_n);
  if (all || suite == "inverse") inverse(out, max_n);
  if (all || suite == "orthogonality") orthogonality(out, max_n);
  if (all || suite == "appendixC") prefix_recurrences(out, max_n);
  return out;
}

bool VerifyReport::ok() const { return failed() == 0; }

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const CaseOutcome& o) { return o.status == CaseStatus::Pass; }));
}

std::size_t VerifyReport::failed() const { return outcomes.size() - passed(); }

std::string VerifyReport::to_text(bool timings) const {
  std::string out;
  for (const auto& o : outcomes) {
    out += std::string(status_name(o.status)) + " " + o.suite + ": " + o.name;
    if (timings) out += " (" + seconds_text(o.seconds) + ")";
    out += "\n";
    if (o.status == CaseStatus::Fail) out += "  counterexample: " + o.detail + "\n";
  }
  out += std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed, " +
         std::to_string(total_cases - outcomes.size()) + " not run";
  if (timings) out += " in " + seconds_text(seconds);
  out += "\n";
  return out;
}

std::string VerifyReport::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_n"] = max_n;
  j["ok"] = ok();
  j["cases"] = total_cases;
  j["passed"] = passed();
  j["failed"] = failed();
  j["not_run"] = total_cases - outcomes.size();
  auto& arr = j["results"] = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json c;
    c["suite"] = o.suite;
    c["name"] = o.name;
    c["status"] = status_name(o.status);
    if (o.status == CaseStatus::Fail) c["counterexample"] = o.detail;
    if (timings) c["seconds"] = o.seconds;
    arr.push_back(std::move(c));
  }
  if (timings) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

VerifyReport run_verify(std::string_view suite, int max_n, unsigned jobs) {
  return run_cases(suite, max_n, verify_cases(suite, max_n), jobs);
}

VerifyReport run_cases(std::string_view suite, int max_n, const std::vector<VerifyCase>& cases, unsigned jobs) {
  const auto start = Clock::now();
  std::vector<CaseOutcome> results(cases.size());
  std::vector<char> done(cases.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{cases.size()};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size() || i > first_failure.load()) return;
      const auto t0 = Clock::now();
      CaseOutcome& o = results[i];
      o.suite = cases[i].suite;
      o.name = cases[i].name;
      CheckResult r;
      try {
        r = cases[i].run();
      } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
      }
      o.status = r.ok ? CaseStatus::Pass : CaseStatus::Fail;
      o.detail = r.detail;
      o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      done[i] = 1;
      if (!r.ok) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerifyReport report;
  report.suite = std::string(suite);
  report.max_n = max_n;
  report.total_cases = cases.size();
  const std::size_t stop = first_failure.load();
  for (std::size_t i = 0; i < cases.size() && i <= stop; ++i) {
    if (!done[i]) break;
    report.outcomes.push_back(std::move(results[i]));
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace qcross
