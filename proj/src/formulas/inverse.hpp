#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "algebra/mpoly.hpp"

namespace qcross {

enum class InversePair { Touchard, Laguerre };
enum class PairDirection { Forward, Inverse };

InversePair parse_inverse_pair(std::string_view name);

/// Dense lower-triangular matrix with rows 0..size-1.
class Triangle {
 public:
  explicit Triangle(std::size_t size);

  std::size_t size() const noexcept { return rows_.size(); }
  MPoly& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const MPoly& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Triangle operator*(const Triangle& rhs) const;
  bool is_identity() const;
  /// Forward substitution; throws NotInvertible unless every diagonal
  /// entry is +1 or -1.
  Triangle inverse() const;
  /// (T s)_n = sum_{k<=n} T[n,k] s_k over the first |s| rows.
  std::vector<MPoly> apply(const std::vector<MPoly>& seq) const;

 private:
  std::vector<std::vector<MPoly>> rows_;
};

/// Touchard forward: T[n, n-2k] = C(n,k) - C(n,k-1); inverse (-1)^k C(n-k,k).
/// Laguerre forward: T[n,k] = prefix_gf_motzkin(n,k); inverse from the
/// level / double-level insertion count.
Triangle pair_triangle(InversePair pair, PairDirection dir, std::size_t size);

std::vector<MPoly> inverse_pair_apply(InversePair pair, PairDirection dir, const std::vector<MPoly>& seq);

/// Weighted Schroeder paths of length 2n: -1 per level step and 1 - q^{h+1}
/// per up step from height h.
MPoly schroeder_b(int n);

}  // namespace qcross
