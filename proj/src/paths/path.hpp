#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "algebra/mpoly.hpp"

namespace qcross {

enum class StepDir { Up, Down, Level, DLevel };

const char* step_dir_name(StepDir dir) noexcept;
int height_change(StepDir dir) noexcept;
/// Horizontal length; a double-level spans two units.
int step_length(StepDir dir) noexcept;

struct Step {
  StepDir dir;
  MPoly weight;

  friend bool operator==(const Step&, const Step&) = default;
};

struct WeightedPath {
  std::vector<Step> steps;

  int length() const noexcept;
  /// Height before each step, followed by the final height.
  std::vector<int> heights() const;
  int final_height() const noexcept;
  bool stays_nonnegative() const;
  bool is_motzkin() const { return stays_nonnegative() && final_height() == 0; }
  MPoly weight() const;

  /// "U(y) U(y*q) L(y*q^2) D(q)"; double-levels are written "LL(-c)".
  std::string to_compact() const;
  static WeightedPath parse_compact(std::string_view text);

  friend bool operator==(const WeightedPath&, const WeightedPath&) = default;
};

MPoly path_weight(const WeightedPath& path);

nlohmann::json to_json(const WeightedPath& path);
WeightedPath path_from_json(const nlohmann::json& j);

/// Accepts either JSON ({"steps":[...]}) or compact notation.
WeightedPath parse_path_text(std::string_view text);

}  // namespace qcross
