#pragma once

#include "paths/path.hpp"
#include "paths/weight_system.hpp"

namespace qcross {

/// Result of Penaud's decomposition: a P_{n,k}(c,d) prefix and an
/// M*_k(a,b,c) core, with k = core length = prefix final height.
struct PenaudPair {
  WeightedPath prefix;
  WeightedPath core;

  int k() const noexcept { return static_cast<int>(core.steps.size()); }
  friend bool operator==(const PenaudPair&, const PenaudPair&) = default;
};

/// `motzkin` must be an M_n(a,b,c,d) system admitting `path`; throws
/// InvalidPath otherwise.
PenaudPair penaud_split(const WeightedPath& path, const WeightSystem& motzkin);

/// Inverse of penaud_split. Throws HeightMismatch when the prefix does not
/// end at the core's length and InvalidPath on malformed input.
WeightedPath penaud_merge(const WeightedPath& prefix, const WeightedPath& core);

/// Swaps the first dlevel(-c) with a peak up(1) down(c) or vice versa.
/// `four_step` supplies c. Paths with neither pattern are returned as is.
WeightedPath cfrac2_involution(const WeightedPath& path, const WeightSystem& four_step);
bool cfrac2_is_fixed(const WeightedPath& path, const WeightSystem& four_step);

}  // namespace qcross
