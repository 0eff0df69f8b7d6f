#pragma once

#include <json.hpp>

#include "algebra/mpoly.hpp"

namespace qcross {

// {"terms":[{"coeff":"<decimal>","exps":{"q":2,"y":1}}, ...]}, terms in
// canonical order, zero exponents omitted.
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j);

}  // namespace qcross
