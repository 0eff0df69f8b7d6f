#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra/mpoly.hpp"

namespace qcross {

/// Power series in t truncated after t^order. Coefficients never contain t.
class TruncSeries {
public:
  explicit TruncSeries(std::uint32_t order);
  TruncSeries(std::uint32_t order, std::vector<MPoly> coeffs);

  /// Splits a polynomial by powers of t, dropping everything past `order`.
  static TruncSeries from_poly(const MPoly& p, std::uint32_t order);
  static TruncSeries one(std::uint32_t order) { return from_poly(MPoly(1), order); }

  std::uint32_t order() const noexcept { return order_; }
  const std::vector<MPoly>& coeffs() const noexcept { return coeffs_; }
  const MPoly& operator[](std::uint32_t i) const { return coeffs_.at(i); }

  MPoly to_poly() const;
  TruncSeries truncate(std::uint32_t order) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& u, const TruncSeries& v);
  friend TruncSeries operator-(const TruncSeries& u, const TruncSeries& v);
  friend TruncSeries operator*(const TruncSeries& u, const TruncSeries& v);
  friend TruncSeries operator*(const MPoly& s, const TruncSeries& u);
  friend bool operator==(const TruncSeries& u, const TruncSeries& v) {
    return u.order_ == v.order_ && u.coeffs_ == v.coeffs_;
  }

  /// Multiplicative inverse. Throws Error(NotInvertible) unless the constant
  /// term is exactly 1 or -1.
  TruncSeries invert() const;

  /// Substitutes t := q^m t.
  TruncSeries compose_scale(std::uint32_t m) const;

  std::string to_string() const;

private:
  std::uint32_t order_;
  std::vector<MPoly> coeffs_;
};

}  // namespace qcross
