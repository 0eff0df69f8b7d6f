#include "formulas/kseries.hpp"

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {
namespace {

void check_params(const KParams& p) {
  if (p.a.contains(Var::t) || p.b.contains(Var::t) || p.c.contains(Var::t))
    throw Error(ErrorCode::InvalidArgument, "K parameters must not contain t");
}

MPoly tpow(std::uint32_t e) { return MPoly::var(Var::t, e); }

TruncSeries series(const MPoly& p, std::uint32_t order) { return TruncSeries::from_poly(p, order); }

}  // namespace

KParams k_family_params(Family f, bool symbolic) {
  const MPoly y = MPoly::var(Var::y), q = MPoly::var(Var::q);
  const MPoly y1q = y * (MPoly(1) - q);
  switch (f) {
    case Family::Hermite: return {0, 0, 1};
    case Family::Charlier: return {0, -1, symbolic ? MPoly::var(Var::c) : y1q};
    case Family::CharlierStar: return {-1, symbolic ? MPoly::var(Var::b) : y1q, 0};
    case Family::Laguerre: return {-1, -(y * q), y};
  }
  return {0, 0, 0};
}

TruncSeries k_series_cf(const KParams& p, std::uint32_t order) {
  check_params(p);
  const MPoly ct2 = p.c * tpow(2);
  const MPoly apb = p.a + p.b;
  const MPoly ab = p.a * p.b;
  // Level l only reaches t^{2l}, so levels beyond order/2 do not matter.
  const std::uint32_t depth = order / 2 + 1;
  TruncSeries tail(order);  // 1 / D_{l+1}, zero below the last level
  for (std::uint32_t l = depth + 1; l-- > 0;) {
    const MPoly ql = q_pow(l);
    const MPoly base = MPoly(1) + ct2 - apb * ql * tpow(1);
    const MPoly lam = tpow(2) * (p.c - ab * ql) * (MPoly(1) - q_pow(l + 1));
    const TruncSeries d = series(base, order) - series(lam, order) * tail;
    tail = d.invert();
  }
  return tail;
}

TruncSeries k_series_closed(Family f, std::uint32_t order) {
  std::vector<MPoly> co(order + 1);
  auto add = [&](std::uint32_t e, const MPoly& v) {
    if (e <= order) co[e] += v;
  };
  const MPoly y = MPoly::var(Var::y), b = MPoly::var(Var::b), c = MPoly::var(Var::c);
  switch (f) {
    case Family::Hermite:
      for (std::uint32_t k = 0; 2 * k <= order; ++k)
        add(2 * k, (k % 2 ? MPoly(-1) : MPoly(1)) * q_pow(k * (k + 1) / 2));
      break;
    case Family::Charlier: {
      QBinomialTable qb(order);
      for (std::uint32_t i = 0; i <= order; ++i)
        for (std::uint32_t j = 0; j <= i && i + j <= order; ++j)
          add(i + j, (i % 2 ? MPoly(-1) : MPoly(1)) * c.pow(j) * q_pow(j * (j + 1) / 2) * qb(i, j));
      break;
    }
    case Family::CharlierStar: {
      QBinomialTable qb(order);
      for (std::uint32_t i = 0; i <= order; ++i)
        for (std::uint32_t j = 0; j <= i; ++j) add(i, ((i - j) % 2 ? MPoly(-1) : MPoly(1)) * b.pow(j) * qb(i, j));
      break;
    }
    case Family::Laguerre:
      for (std::uint32_t k = 0; k <= order; ++k) {
        MPoly inner;
        for (std::uint32_t i = 0; i <= k; ++i) inner += y.pow(i) * q_pow(i * (k + 1 - i));
        add(k, (k % 2 ? MPoly(-1) : MPoly(1)) * inner);
      }
      break;
  }
  return TruncSeries(order, std::move(co));
}

TruncSeries k_series_hypergeometric(const KParams& p, std::uint32_t order) {
  check_params(p);
  TruncSeries sum(order);
  TruncSeries term = TruncSeries::one(order);
  if (p.b.is_zero()) {
    // 1phi1(q; aq; q, Cq): term_i = term_{i-1} * (-c q^i t^2) / (1 - a q^i t)
    for (std::uint32_t i = 0; 2 * i <= order; ++i) {
      if (i > 0) {
        term = series(-(p.c * q_pow(i) * tpow(2)), order) * term;
        term = series(MPoly(1) - p.a * q_pow(i) * tpow(1), order).invert() * term;
      }
      sum = sum + term;
    }
  } else {
    // term_i = term_{i-1} * t (b - c q^i t) / (1 - a q^i t)
    for (std::uint32_t i = 0; i <= order; ++i) {
      if (i > 0) {
        term = series(tpow(1) * (p.b - p.c * q_pow(i) * tpow(1)), order) * term;
        term = series(MPoly(1) - p.a * q_pow(i) * tpow(1), order).invert() * term;
      }
      sum = sum + term;
    }
  }
  return series(MPoly(1) - p.a * tpow(1), order).invert() * sum;
}

namespace {

// Power series in t truncated at `order` whose coefficients are polynomials
// in an extra variable z: coeff[n][e] multiplies t^n z^e.
class TZSeries {
public:
  explicit TZSeries(std::uint32_t order) : coeff_(order + 1) {}

  std::uint32_t order() const { return static_cast<std::uint32_t>(coeff_.size()) - 1; }
  MPoly& at(std::uint32_t n, std::uint32_t e) {
    auto& row = coeff_[n];
    if (row.size() <= e) row.resize(e + 1);
    return row[e];
  }
  const std::vector<MPoly>& row(std::uint32_t n) const { return coeff_[n]; }

  /// c * t^tn * z^ze
  static TZSeries monomial(std::uint32_t order, const MPoly& c, std::uint32_t tn, std::uint32_t ze) {
    TZSeries s(order);
    if (tn <= order) s.at(tn, ze) = c;
    return s;
  }

  TZSeries operator+(const TZSeries& o) const {
    TZSeries out = *this;
    for (std::uint32_t n = 0; n <= order(); ++n)
      for (std::uint32_t e = 0; e < o.coeff_[n].size(); ++e)
        if (!o.coeff_[n][e].is_zero()) out.at(n, e) += o.coeff_[n][e];
    return out;
  }
  TZSeries operator-(const TZSeries& o) const { return *this + o.scaled(MPoly(-1)); }

  TZSeries scaled(const MPoly& c) const {
    TZSeries out = *this;
    for (auto& row : out.coeff_)
      for (auto& v : row) v *= c;
    return out;
  }

  TZSeries operator*(const TZSeries& o) const {
    TZSeries out(order());
    for (std::uint32_t n = 0; n <= order(); ++n)
      for (std::uint32_t e = 0; e < coeff_[n].size(); ++e) {
        if (coeff_[n][e].is_zero()) continue;
        for (std::uint32_t m = 0; n + m <= order(); ++m)
          for (std::uint32_t f = 0; f < o.coeff_[m].size(); ++f)
            if (!o.coeff_[m][f].is_zero()) out.at(n + m, e + f) += coeff_[n][e] * o.coeff_[m][f];
      }
    return out;
  }

  /// z := q z
  TZSeries scale_z() const {
    TZSeries out = *this;
    for (auto& row : out.coeff_)
      for (std::uint32_t e = 0; e < row.size(); ++e) row[e] *= q_pow(e);
    return out;
  }

  /// Inverse when the t^0 coefficient is exactly 1.
  TZSeries invert() const {
    const auto& r0 = coeff_[0];
    bool unit = !r0.empty() && r0[0].is_one();
    for (std::size_t e = 1; e < r0.size(); ++e) unit = unit && r0[e].is_zero();
    if (!unit) throw Error(ErrorCode::NotInvertible, "functional equation: denominator does not start with 1");
    TZSeries out(order());
    out.at(0, 0) = 1;
    for (std::uint32_t n = 1; n <= order(); ++n) {
      // out_n = -sum_{m=1..n} this_m out_{n-m}
      for (std::uint32_t m = 1; m <= n; ++m)
        for (std::uint32_t e = 0; e < coeff_[m].size(); ++e) {
          if (coeff_[m][e].is_zero()) continue;
          const auto prev = out.coeff_[n - m];
          for (std::uint32_t f = 0; f < prev.size(); ++f)
            if (!prev[f].is_zero()) out.at(n, e + f) -= coeff_[m][e] * prev[f];
        }
    }
    return out;
  }

  TruncSeries at_z_one() const {
    std::vector<MPoly> co(coeff_.size());
    for (std::size_t n = 0; n < coeff_.size(); ++n)
      for (const auto& v : coeff_[n]) co[n] += v;
    return TruncSeries(order(), std::move(co));
  }

  bool operator==(const TZSeries& o) const {
    for (std::uint32_t n = 0; n <= order(); ++n) {
      const std::size_t len = std::max(coeff_[n].size(), o.coeff_[n].size());
      for (std::size_t e = 0; e < len; ++e) {
        const MPoly zero;
        const MPoly& l = e < coeff_[n].size() ? coeff_[n][e] : zero;
        const MPoly& r = e < o.coeff_[n].size() ? o.coeff_[n][e] : zero;
        if (!(l == r)) return false;
      }
    }
    return true;
  }

private:
  std::vector<std::vector<MPoly>> coeff_;
};

}  // namespace

TruncSeries functional_equation_solve(const KParams& p, std::uint32_t order) {
  check_params(p);
  // A = at, B = bt, C = ct^2
  const auto one = TZSeries::monomial(order, 1, 0, 0);
  const auto C = TZSeries::monomial(order, p.c, 2, 0);
  const auto ApBz = TZSeries::monomial(order, p.a + p.b, 1, 1);
  const auto ABz = TZSeries::monomial(order, p.a * p.b, 2, 1);
  const auto one_minus_qz = one - TZSeries::monomial(order, MPoly::var(Var::q), 0, 1);
  const TZSeries base = one + C - ApBz;
  const TZSeries lam = (C - ABz) * one_minus_qz;

  TZSeries m = one;
  for (std::uint32_t round = 0; round < order + 2; ++round) {
    TZSeries next = (base - lam * m.scale_z()).invert();
    if (next == m) return m.at_z_one();
    m = std::move(next);
  }
  throw Error(ErrorCode::NonConvergence,
              "functional equation iteration did not settle within " + std::to_string(order + 2) + " rounds");
}

}  // namespace qcross
