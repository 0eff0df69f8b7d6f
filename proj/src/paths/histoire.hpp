#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "objects/brute_gf.hpp"
#include "objects/objects.hpp"
#include "paths/path.hpp"
#include "paths/weight_system.hpp"

namespace qcross {

enum class Family { Hermite, Charlier, CharlierStar, Laguerre };

const char* family_name(Family f) noexcept;
/// Accepts "hermite", "charlier", "charlier*" (or "charlier-star"), "laguerre".
Family parse_family(std::string_view name);

WeightSystem histoire_system(Family f);
ObjectKind object_kind(Family f) noexcept;
Weighting object_weighting(Family f) noexcept;

using CombObject = std::variant<Matching, SetPartition, Permutation>;

/// Statistic monomial q^cro, y^blocks q^cro(*) or y^wex q^cro.
MPoly object_weight(const CombObject& obj, Family f);

WeightedPath histoire_of(const Matching& m);
WeightedPath histoire_of(const SetPartition& p, bool star);
WeightedPath histoire_of(const Permutation& s);
/// Throws InvalidArgument when the object kind does not match the family.
WeightedPath histoire_of(const CombObject& obj, Family f);

/// Inverse of histoire_of; throws InvalidHistoire when `path` is not a
/// histoire of the family.
CombObject object_of(const WeightedPath& path, Family f);

}  // namespace qcross
