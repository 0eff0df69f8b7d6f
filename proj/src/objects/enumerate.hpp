#pragma once

#include <cstdint>
#include <vector>

#include "objects/objects.hpp"

namespace qcross {

// A shard selects a deterministic subset of the search tree: every node at
// a fixed split depth gets a sequential id, and shard s visits the subtrees
// whose id is congruent to s modulo the shard count. The union over all
// shards is every object exactly once.
struct Shard {
  unsigned index = 0;
  unsigned count = 1;
};

namespace detail {

inline constexpr int kSplitDepth = 3;

class ShardGate {
public:
  explicit ShardGate(Shard shard) : shard_(shard) {}
  // Called when the recursion reaches the split depth (or a leaf above it).
  bool take() { return (next_id_++ % shard_.count) == shard_.index; }

private:
  Shard shard_;
  std::uint64_t next_id_ = 0;
};

template <class Fn>
void matching_rec(Matching& m, int placed, int total, ShardGate& gate, Fn& fn) {
  if (placed == std::min(kSplitDepth, total) && !gate.take()) return;
  if (placed == total) {
    fn(static_cast<const Matching&>(m));
    return;
  }
  std::size_t i = 0;
  while (m.partner[i] != 0) ++i;
  for (std::size_t j = i + 1; j < m.partner.size(); ++j) {
    if (m.partner[j] != 0) continue;
    m.partner[i] = static_cast<int>(j + 1);
    m.partner[j] = static_cast<int>(i + 1);
    matching_rec(m, placed + 1, total, gate, fn);
    m.partner[i] = 0;
    m.partner[j] = 0;
  }
}

template <class Fn>
void rgs_rec(std::vector<int>& rgs, int pos, int max_label, SetPartition& scratch, ShardGate& gate, Fn& fn) {
  const int n = static_cast<int>(rgs.size());
  if (pos == std::min(kSplitDepth + 1, n) && !gate.take()) return;
  if (pos == n) {
    scratch.n = n;
    scratch.blocks.assign(static_cast<std::size_t>(max_label + 1), {});
    for (int i = 0; i < n; ++i) scratch.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    fn(static_cast<const SetPartition&>(scratch));
    return;
  }
  for (int label = 0; label <= max_label + 1; ++label) {
    rgs[static_cast<std::size_t>(pos)] = label;
    rgs_rec(rgs, pos + 1, std::max(max_label, label), scratch, gate, fn);
  }
}

template <class Fn>
void perm_rec(Permutation& p, std::vector<char>& used, int pos, ShardGate& gate, Fn& fn) {
  const int n = p.size();
  if (pos == std::min(kSplitDepth, n) && !gate.take()) return;
  if (pos == n) {
    fn(static_cast<const Permutation&>(p));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v - 1)]) continue;
    used[static_cast<std::size_t>(v - 1)] = 1;
    p.image[static_cast<std::size_t>(pos)] = v;
    perm_rec(p, used, pos + 1, gate, fn);
    used[static_cast<std::size_t>(v - 1)] = 0;
  }
}

}  // namespace detail

/// Perfect matchings of {1..2*pairs}: the smallest unmatched element is
/// paired first, partners tried in increasing order.
template <class Fn>
void for_each_matching(int pairs, Fn&& fn, Shard shard = {}) {
  Matching m;
  m.partner.assign(static_cast<std::size_t>(2 * pairs), 0);
  detail::ShardGate gate(shard);
  detail::matching_rec(m, 0, pairs, gate, fn);
}

/// Set partitions of {1..n} in lexicographic restricted-growth-string order.
template <class Fn>
void for_each_set_partition(int n, Fn&& fn, Shard shard = {}) {
  detail::ShardGate gate(shard);
  SetPartition scratch;
  if (n == 0) {
    if (gate.take()) fn(static_cast<const SetPartition&>(scratch));
    return;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // rgs[0] is always 0.
  detail::rgs_rec(rgs, 1, 0, scratch, gate, fn);
}

/// Permutations of {1..n} in lexicographic one-line order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn, Shard shard = {}) {
  Permutation p;
  p.image.assign(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  detail::ShardGate gate(shard);
  detail::perm_rec(p, used, 0, gate, fn);
}

std::vector<Matching> all_matchings(int pairs);
std::vector<SetPartition> all_set_partitions(int n);
std::vector<Permutation> all_permutations(int n);

}  // namespace qcross
