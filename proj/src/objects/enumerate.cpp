#include "objects/enumerate.hpp"

namespace qcross {

std::vector<Matching> all_matchings(int pairs) {
  std::vector<Matching> out;
  for_each_matching(pairs, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace qcross
