#include "formulas/inverse.hpp"

#include "algebra/qnumbers.hpp"
#include "error.hpp"
#include "formulas/closed_forms.hpp"
#include "paths/weight_system.hpp"

namespace qcross {

InversePair parse_inverse_pair(std::string_view name) {
  if (name == "touchard") return InversePair::Touchard;
  if (name == "laguerre") return InversePair::Laguerre;
  throw Error(ErrorCode::InvalidArgument, "unknown inverse pair '" + std::string(name) + "'");
}

Triangle::Triangle(std::size_t size) : rows_(size) {
  for (std::size_t i = 0; i < size; ++i) rows_[i].resize(i + 1);
}

Triangle Triangle::operator*(const Triangle& rhs) const {
  if (rhs.size() != size()) throw Error(ErrorCode::InvalidArgument, "triangle size mismatch");
  Triangle out(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t m = j; m <= i; ++m)
        if (!rows_[i][m].is_zero() && !rhs.rows_[m][j].is_zero()) out.rows_[i][j] += rows_[i][m] * rhs.rows_[m][j];
  return out;
}

bool Triangle::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(rows_[i][j] == MPoly(i == j ? 1 : 0))) return false;
  return true;
}

Triangle Triangle::inverse() const {
  Triangle out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const MPoly& d = rows_[i][i];
    if (!(d == MPoly(1) || d == MPoly(-1)))
      throw Error(ErrorCode::NotInvertible, "triangle diagonal entry " + d.to_string() + " is not a unit");
  }
  // Row i of the inverse: out[i][j] = -d_i sum_{j<=m<i} T[i][m] out[m][j], out[i][i] = d_i.
  for (std::size_t i = 0; i < size(); ++i) {
    const MPoly& d = rows_[i][i];
    out.rows_[i][i] = d;
    for (std::size_t j = 0; j < i; ++j) {
      MPoly acc;
      for (std::size_t m = j; m < i; ++m)
        if (!rows_[i][m].is_zero() && !out.rows_[m][j].is_zero()) acc += rows_[i][m] * out.rows_[m][j];
      out.rows_[i][j] = -(d * acc);
    }
  }
  return out;
}

std::vector<MPoly> Triangle::apply(const std::vector<MPoly>& seq) const {
  if (seq.size() > size())
    throw Error(ErrorCode::InvalidArgument, "sequence of length " + std::to_string(seq.size()) +
                                                " exceeds triangle size " + std::to_string(size()));
  std::vector<MPoly> out(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!rows_[n][k].is_zero()) out[n] += rows_[n][k] * seq[k];
  return out;
}

Triangle pair_triangle(InversePair pair, PairDirection dir, std::size_t size) {
  Triangle t(size);
  const MPoly y = MPoly::var(Var::y);
  for (std::size_t ni = 0; ni < size; ++ni) {
    const auto n = static_cast<std::int64_t>(ni);
    if (pair == InversePair::Touchard) {
      for (std::int64_t k = 0; 2 * k <= n; ++k) {
        BigInt v;
        if (dir == PairDirection::Forward)
          v = binomial(n, k) - binomial(n, k - 1);
        else
          v = (k % 2 ? -1 : 1) * binomial(n - k, k);
        t.at(ni, static_cast<std::size_t>(n - 2 * k)) = MPoly(v);
      }
      continue;
    }
    for (std::int64_t k = 0; k <= n; ++k) {
      if (dir == PairDirection::Forward) {
        t.at(ni, static_cast<std::size_t>(k)) = prefix_gf_motzkin(static_cast<int>(n), static_cast<int>(k));
        continue;
      }
      MPoly entry;
      for (std::int64_t j = 0; 2 * j <= n - k; ++j) {
        const BigInt ways = binomial(n - j, n - k - j) * binomial(n - k - j, j);
        entry += MPoly(ways) * (-y).pow(static_cast<std::uint32_t>(j)) *
                 (MPoly(-1) - y).pow(static_cast<std::uint32_t>(n - k - 2 * j));
      }
      t.at(ni, static_cast<std::size_t>(k)) = entry;
    }
  }
  return t;
}

std::vector<MPoly> inverse_pair_apply(InversePair pair, PairDirection dir, const std::vector<MPoly>& seq) {
  return pair_triangle(pair, dir, seq.size()).apply(seq);
}

MPoly schroeder_b(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "schroeder_b: negative n");
  return gf_paths(WeightSystem::schroeder(), 2 * n);
}

}  // namespace qcross
