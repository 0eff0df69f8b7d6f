#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcross {

using BigInt = mpz_class;

// The closed variable universe. Order matters: it fixes exponent-vector
// layout, rendering order inside a monomial, and the monomial order.
enum class Var : std::uint8_t { q = 0, y, t, a, b, c, d };

inline constexpr std::size_t kNumVars = 7;
inline constexpr std::array<char, kNumVars> kVarNames{'q', 'y', 't', 'a', 'b', 'c', 'd'};

using Exponents = std::array<std::uint32_t, kNumVars>;

std::uint64_t total_degree(const Exponents& e) noexcept;

// Graded order: lower total degree first; within a degree, the term with the
// larger exponent on the earlier variable comes first (so q precedes y).
// This is a monomial order, which exact_div relies on.
struct MonomialOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const noexcept;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over {q, y, t, a, b, c, d}. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
class MPoly {
public:
  using TermMap = std::map<Exponents, BigInt, MonomialOrder>;

  MPoly() = default;
  MPoly(long value);  // NOLINT: integer constants promote implicitly
  explicit MPoly(const BigInt& value);

  static MPoly monomial(const BigInt& coeff, const Exponents& exps);
  static MPoly var(Var v, std::uint32_t power = 1);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const noexcept;

  BigInt coeff(const Exponents& exps) const;
  BigInt constant_term() const;
  std::uint32_t degree_in(Var v) const noexcept;
  bool contains(Var v) const noexcept { return degree_in(v) > 0; }

  /// Coefficient of v^power, as a polynomial free of v.
  MPoly coeff_of(Var v, std::uint32_t power) const;

  MPoly pow(std::uint32_t exponent) const;
  MPoly substitute(Var v, const MPoly& value) const;
  /// Multiplies the term with exponent e_v on v by factor^e_v.
  MPoly scale_var(Var v, const MPoly& factor) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend bool operator==(const MPoly& lhs, const MPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Canonical rendering, e.g. "2 - 3*q + q^3". This text is a golden-file
  /// contract; do not change the format without regenerating tests/golden.
  std::string to_string() const;

  /// Accepts canonical output as well as compact forms like "yq^2", "-abq"
  /// and "3y*c^2". Throws Error(Parse).
  static MPoly parse(std::string_view text);

  void add_term(const Exponents& exps, const BigInt& coeff);

private:
  TermMap terms_;
};

/// Quotient s with p = r*s. Throws Error(NotDivisible) on a nonzero
/// remainder and Error(InvalidArgument) when r is zero.
MPoly exact_div(const MPoly& p, const MPoly& r);

std::string render_monomial(const Exponents& exps);

}  // namespace qcross
