#pragma once

#include "algebra/mpoly.hpp"

namespace qcross {

enum class ObjectKind { Matching, SetPartition, Permutation };

enum class Weighting {
  Cro,            // q^cro                (matchings)
  BlocksCro,      // y^blocks q^cro       (set partitions)
  BlocksCroStar,  // y^blocks q^cro*      (set partitions)
  WexCro,         // y^wex q^cro          (permutations)
};

/// Exact sum of the weighting over every object of the given size. For
/// matchings `n` is the number of arcs (ground set {1..2n}). The sweep is
/// split into `jobs` shards whose integer tallies are summed, so the result
/// does not depend on `jobs`.
MPoly brute_gf(ObjectKind kind, int n, Weighting weighting, unsigned jobs = 1);

}  // namespace qcross
