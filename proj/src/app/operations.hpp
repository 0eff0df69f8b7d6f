#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "algebra/mpoly.hpp"
#include "algebra/series.hpp"
#include "paths/histoire.hpp"

namespace qcross {

enum class MomentMethod { Brute, Paths, Formula };
MomentMethod parse_moment_method(std::string_view name);

/// Largest K-series order accepted without the unsafe flag.
inline constexpr int kMaxExpandOrder = 40;

/// Moment n of the family (moment 2n for Hermite). Throws GuardExceeded,
/// naming the limit, unless `unsafe`.
MPoly compute_moment(Family f, int n, MomentMethod method, unsigned jobs, bool unsafe);

/// Closed forms by name: hermite/touchard, charlier, charlier*, laguerre
/// (k < 0 gives the full moment, otherwise the y^k coefficient), qstirling,
/// trinomial, ballot, prefix and schroeder.
MPoly compute_formula(std::string_view name, int n, int k, bool unsafe);

/// K-series of the family by "cf", "closed", "hypergeometric" or
/// "functional", as a polynomial in t.
MPoly compute_expansion(Family f, int order, std::string_view method, bool symbolic, bool unsafe);

/// Penaud split of a path in M_n(a,b,c,d), symbolic or at the family's
/// specialisation.
nlohmann::ordered_json decompose_path(std::string_view path_text, std::optional<Family> family);
/// The histoire of an object given in its text encoding.
nlohmann::ordered_json histoire_of_text(Family f, std::string_view object_text);
/// The object whose histoire is the given path.
nlohmann::ordered_json object_of_text(Family f, std::string_view path_text);
/// theta on a core word, with statistics and weights.
nlohmann::ordered_json theta_of_text(std::string_view word);

/// Kinds: touchard, charlier, charlier*, laguerre, qstirling, ballot, prefix.
/// Rows for from <= n <= max_n in a fixed order; csv or json.
std::string emit_table(std::string_view kind, int from, int max_n, std::string_view format, bool unsafe);

}  // namespace qcross
