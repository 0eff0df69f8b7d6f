#include "algebra/series.hpp"

#include <algorithm>

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {

TruncSeries::TruncSeries(std::uint32_t order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::uint32_t order, std::vector<MPoly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw Error(ErrorCode::InvalidArgument, "TruncSeries: need order+1 coefficients");
  for (const auto& c : coeffs_)
    if (c.contains(Var::t)) throw Error(ErrorCode::InvalidArgument, "TruncSeries: coefficient contains t");
}

TruncSeries TruncSeries::from_poly(const MPoly& p, std::uint32_t order) {
  TruncSeries out(order);
  for (const auto& [e, c] : p.terms()) {
    const auto power = e[static_cast<std::size_t>(Var::t)];
    if (power > order) continue;
    Exponents rest = e;
    rest[static_cast<std::size_t>(Var::t)] = 0;
    out.coeffs_[power].add_term(rest, c);
  }
  return out;
}

MPoly TruncSeries::to_poly() const {
  MPoly out;
  for (std::uint32_t i = 0; i <= order_; ++i) out += coeffs_[i] * MPoly::var(Var::t, i);
  return out;
}

TruncSeries TruncSeries::truncate(std::uint32_t order) const {
  if (order > order_) throw Error(ErrorCode::InvalidArgument, "TruncSeries: cannot extend truncation order");
  return TruncSeries(order, std::vector<MPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries operator+(const TruncSeries& u, const TruncSeries& v) {
  TruncSeries out(std::min(u.order_, v.order_));
  for (std::uint32_t i = 0; i <= out.order_; ++i) out.coeffs_[i] = u.coeffs_[i] + v.coeffs_[i];
  return out;
}

TruncSeries operator-(const TruncSeries& u, const TruncSeries& v) { return u + (-v); }

TruncSeries operator*(const TruncSeries& u, const TruncSeries& v) {
  TruncSeries out(std::min(u.order_, v.order_));
  for (std::uint32_t i = 0; i <= out.order_; ++i) {
    if (u.coeffs_[i].is_zero()) continue;
    for (std::uint32_t j = 0; i + j <= out.order_; ++j) {
      if (v.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += u.coeffs_[i] * v.coeffs_[j];
    }
  }
  return out;
}

TruncSeries operator*(const MPoly& s, const TruncSeries& u) {
  TruncSeries out = u;
  for (auto& c : out.coeffs_) c = s * c;
  return out;
}

TruncSeries TruncSeries::invert() const {
  const MPoly& c0 = coeffs_[0];
  if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1))
    throw Error(ErrorCode::NotInvertible, "TruncSeries::invert: constant term " + c0.to_string() + " is not +-1");
  const MPoly inv0 = c0;  // (+-1)^{-1} = +-1
  TruncSeries out(order_);
  out.coeffs_[0] = inv0;
  for (std::uint32_t n = 1; n <= order_; ++n) {
    MPoly acc;
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (coeffs_[i].is_zero()) continue;
      acc += coeffs_[i] * out.coeffs_[n - i];
    }
    out.coeffs_[n] = -(inv0 * acc);
  }
  return out;
}

TruncSeries TruncSeries::compose_scale(std::uint32_t m) const {
  TruncSeries out = *this;
  for (std::uint32_t i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] * q_pow(m * i);
  return out;
}

std::string TruncSeries::to_string() const {
  return to_poly().to_string() + " + O(t^" + std::to_string(order_ + 1) + ")";
}

}  // namespace qcross
