#pragma once

#include <functional>
#include <string>
#include <vector>

#include "algebra/mpoly.hpp"
#include "paths/path.hpp"

namespace qcross {

enum class SystemKind {
  Hermite,
  Charlier,
  CharlierStar,
  Laguerre,
  Motzkin,      // M_n(a,b,c,d)
  MotzkinStar,  // M*_k(a,b,c): no level d, no peak up(1) down(c)
  Prefix,       // P_{n,k}(c,d)
  Schroeder,
  FourStep,     // M*_k system with the peak swapped for a dlevel(-c)
};

struct MenuEntry {
  MPoly weight;
  // The 1 / d / c entries of the M-type menus, which Penaud's decomposition
  // and the peak prohibition look at.
  bool primary = false;
};

class WeightSystem {
 public:
  static WeightSystem hermite();
  static WeightSystem charlier();
  static WeightSystem charlier_star();
  static WeightSystem laguerre();
  static WeightSystem motzkin(MPoly a, MPoly b, MPoly c, MPoly d);
  static WeightSystem motzkin_star(MPoly a, MPoly b, MPoly c);
  static WeightSystem prefix(MPoly c, MPoly d);
  static WeightSystem schroeder();
  static WeightSystem four_step(MPoly a, MPoly b, MPoly c);

  SystemKind kind() const noexcept { return kind_; }
  const MPoly& a() const noexcept { return a_; }
  const MPoly& b() const noexcept { return b_; }
  const MPoly& c() const noexcept { return c_; }
  const MPoly& d() const noexcept { return d_; }
  std::string name() const;

  /// Admissible weights for a step of the given kind starting at `height`.
  /// Zero weights are dropped; downs are never offered at height 0.
  std::vector<MenuEntry> menu(StepDir dir, int height) const;
  bool forbids_primary_peak() const noexcept { return kind_ == SystemKind::MotzkinStar; }
  bool uses_dlevel() const noexcept { return kind_ == SystemKind::Schroeder || kind_ == SystemKind::FourStep; }

  /// True when `path` is drawn from this system (menus, heights, peak rule).
  bool admits(const WeightedPath& path, int end_height) const;
  bool admits_prefix(const WeightedPath& path) const;

 private:
  explicit WeightSystem(SystemKind kind) : kind_(kind) {}

  SystemKind kind_;
  MPoly a_, b_, c_, d_;
};

/// Height to end on; `kAnyHeight` sums over every final height.
inline constexpr int kAnyHeight = -1;

/// Weighted count of the system's paths of length n, by dynamic programming
/// over heights.
MPoly gf_paths(const WeightSystem& system, int n, int end_height = 0);

/// Guard for exhaustive path generation.
inline constexpr int kMaxEnumerateLength = 14;

/// Calls `fn` once for every admissible path (every menu choice counts).
/// Throws TooLarge when n exceeds kMaxEnumerateLength.
void for_each_path(const WeightSystem& system, int n, int end_height,
                   const std::function<void(const WeightedPath&)>& fn);
std::vector<WeightedPath> enumerate_paths(const WeightSystem& system, int n, int end_height = 0);

}  // namespace qcross
