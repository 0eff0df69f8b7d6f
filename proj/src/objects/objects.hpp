#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcross {

// All three object types use 1-based element labels in their public fields
// and text forms, matching the usual drawing on {1..n}.

/// Perfect matching of {1..2n}; partner[i-1] is the element matched with i.
struct Matching {
  std::vector<int> partner;

  int ground_size() const noexcept { return static_cast<int>(partner.size()); }
  int pairs() const noexcept { return ground_size() / 2; }
  /// Arcs (i, j) with i < j, sorted by opener.
  std::vector<std::pair<int, int>> arcs() const;

  static Matching from_pairs(int ground_size, const std::vector<std::pair<int, int>>& pairs);
  /// "1-5,2-4,3-9,6-7,8-10"
  static Matching parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Set partition of {1..n} with blocks sorted internally and by minimum.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
  /// "1 5 8|2 6|3 4|7"
  static SetPartition parse(std::string_view text);
  std::string to_string() const;

  /// Consecutive-element arcs (b_i, b_{i+1}) of every block.
  std::vector<std::pair<int, int>> arcs() const;
  int block_count() const noexcept { return static_cast<int>(blocks.size()); }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Permutation of {1..n} in one-line form; image[i-1] = sigma(i).
struct Permutation {
  std::vector<int> image;

  int size() const noexcept { return static_cast<int>(image.size()); }
  static Permutation from_image(std::vector<int> image);
  /// "3 4 7 1 5 2 8 6"
  static Permutation parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

int cro_matching(const Matching& m);
int cro_partition(const SetPartition& p);
/// Crossings after attaching an infinite rightward arc to every block
/// maximum; such an arc from i crosses a finite arc (k,l) iff k < i < l.
int cro_star_partition(const SetPartition& p);

struct PermStats {
  int wex = 0;
  int cro = 0;
  friend bool operator==(const PermStats&, const PermStats&) = default;
};
PermStats perm_stats(const Permutation& s);

}  // namespace qcross
