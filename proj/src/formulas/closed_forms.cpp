#include "formulas/closed_forms.hpp"

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {
namespace {

void check_nk(const char* what, int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": need 0 <= k <= n, got n=" + std::to_string(n) +
                                                ", k=" + std::to_string(k));
}

MPoly B(std::int64_t n, std::int64_t k) { return MPoly(binomial(n, k)); }

MPoly sign(std::int64_t e) { return e % 2 == 0 ? MPoly(1) : MPoly(-1); }

MPoly y_pow(std::int64_t e) { return MPoly::var(Var::y, static_cast<std::uint32_t>(e)); }

std::uint32_t tri(std::int64_t j) { return static_cast<std::uint32_t>(j * (j + 1) / 2); }

}  // namespace

MPoly touchard_riordan(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "touchard_riordan: negative n");
  MPoly sum;
  for (int k = 0; k <= n; ++k) sum += sign(k) * (B(2 * n, n - k) - B(2 * n, n - k - 1)) * q_pow(tri(k));
  return exact_div(sum, one_minus_q_pow(static_cast<std::uint32_t>(n)));
}

MPoly charlier_crossings(int n, int k) {
  check_nk("charlier_crossings", n, k);
  MPoly sum;
  for (int j = 0; j <= k; ++j) {
    // qbin(i, j) walked along i by qbin(i+1, j) = qbin(i, j) [i+1] / [i+1-j].
    MPoly qb(1);
    for (int i = j; i <= n - k; ++i) {
      if (i > j) qb = exact_div(qb * q_int(i), q_int(i - j));
      sum += sign(i) * (B(n, k + i) * B(n, k - j) - B(n, k + i + 1) * B(n, k - j - 1)) * qb * q_pow(tri(j));
    }
  }
  return exact_div(sum, one_minus_q_pow(static_cast<std::uint32_t>(n - k)));
}

MPoly charlier_star(int n, int k) {
  check_nk("charlier_star", n, k);
  MPoly sum;
  MPoly qb(1);  // qbin(k+j, j)
  for (int j = 0; j <= n - k; ++j) {
    if (j > 0) qb = exact_div(qb * q_int(k + j), q_int(j));
    sum += sign(j) * B(n, k + j) * qb;
  }
  return exact_div(sum, one_minus_q_pow(static_cast<std::uint32_t>(n - k)));
}

MPoly laguerre_moment(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "laguerre_moment: negative n");
  MPoly sum;
  for (int k = 0; k <= n; ++k) {
    MPoly left, right;
    for (int j = 0; j <= n - k; ++j)
      left += y_pow(j) * (B(n, j) * B(n, j + k) - B(n, j - 1) * B(n, j + k + 1));
    for (int i = 0; i <= k; ++i) right += y_pow(i) * q_pow(static_cast<std::uint32_t>(i * (k + 1 - i)));
    sum += sign(k) * left * right;
  }
  return exact_div(sum, one_minus_q_pow(static_cast<std::uint32_t>(n)));
}

MPoly q_stirling(int n, int k) {
  check_nk("q_stirling", n, k);
  std::vector<MPoly> row{MPoly(1)};  // S[0,0]
  for (int m = 1; m <= n; ++m) {
    std::vector<MPoly> next(static_cast<std::size_t>(m + 1));
    for (int j = 1; j <= m; ++j) {
      MPoly v = row[static_cast<std::size_t>(j - 1)];
      if (j < m) v += q_int(j) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

MPoly closed_form_moment(Family f, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "closed_form_moment: negative n");
  switch (f) {
    case Family::Hermite: return touchard_riordan(n);
    case Family::Charlier: {
      MPoly out;
      for (int k = 0; k <= n; ++k) out += charlier_crossings(n, k) * y_pow(k);
      return out;
    }
    case Family::CharlierStar: {
      MPoly out;
      for (int k = 0; k <= n; ++k) out += charlier_star(n, k) * y_pow(k);
      return out;
    }
    case Family::Laguerre: return laguerre_moment(n);
  }
  return MPoly();
}

MPoly prefix_count_trinomial(int n, int k) {
  check_nk("prefix_count_trinomial", n, k);
  MPoly sum;
  for (int l = 0; l <= n - k; ++l) {
    const int de = 2 * l - n + k;
    if (de < 0) continue;
    sum += B(n + 1, l) * B(l, de) * MPoly::var(Var::d, static_cast<std::uint32_t>(de)) *
           MPoly::var(Var::c, static_cast<std::uint32_t>(n - k - l));
  }
  return exact_div(MPoly(k + 1) * sum, MPoly(n + 1));
}

BigInt prefix_count_ballot(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error(ErrorCode::InvalidArgument, "prefix_count_ballot: need 0 <= k <= n");
  if ((n - k) % 2 != 0)
    throw Error(ErrorCode::ParityMismatch, "prefix_count_ballot: n-k = " + std::to_string(n - k) + " is odd");
  const int m = (n - k) / 2;
  return binomial(n, m) - binomial(n, m - 1);
}

MPoly prefix_gf_motzkin(int n, int k) {
  check_nk("prefix_gf_motzkin", n, k);
  MPoly sum;
  for (int j = 0; j <= n - k; ++j) sum += (B(n, j) * B(n, j + k) - B(n, j - 1) * B(n, j + k + 1)) * y_pow(j);
  return sum;
}

}  // namespace qcross
