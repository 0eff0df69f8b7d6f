#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "algebra/mpoly.hpp"
#include "paths/path.hpp"

namespace qcross {

/// Word over x (up, weight 1), y (down, weight 1), Y (down from height h,
/// weight -q^h) and z (level at height h, weight -q^h).
struct CoreWord {
  std::string letters;

  static CoreWord parse(std::string_view text);
  const std::string& to_string() const noexcept { return letters; }

  int j() const noexcept;  // number of x
  int k() const noexcept;  // j + number of z
  MPoly weight() const;
  WeightedPath to_path() const;

  friend bool operator==(const CoreWord&, const CoreWord&) = default;
};

/// Empty string when `w` lies in C_{j,k}, else the first violated condition.
std::string core_word_violation(const CoreWord& w);
bool in_C(const CoreWord& w);

struct UV {
  int u = 0;
  int v = 0;
  friend bool operator==(const UV&, const UV&) = default;
};

/// u: length of the last run of x. v: starting height of the last y when
/// no x follows it, j otherwise. Only the letters are checked.
UV uv_stats(const CoreWord& w);

/// The sign-reversing involution on C_{j,k}; throws NotInC.
CoreWord theta(const CoreWord& w);

/// Every word of C_{j,k}, in a fixed order (x before y before Y before z).
void for_each_core_word(int j, int k, const std::function<void(const CoreWord&)>& fn);

}  // namespace qcross
