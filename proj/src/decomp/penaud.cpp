#include "decomp/penaud.hpp"

#include <algorithm>

#include "error.hpp"

namespace qcross {
namespace {

// primary[i] is true when step i takes the 1 / d / c entry of its menu.
std::vector<bool> primary_flags(const WeightedPath& path, const WeightSystem& system) {
  std::vector<bool> out;
  int h = 0;
  for (const auto& s : path.steps) {
    bool primary = false;
    for (const auto& e : system.menu(s.dir, h)) {
      if (e.weight == s.weight) {
        primary = e.primary;
        break;
      }
    }
    out.push_back(primary);
    h += height_change(s.dir);
  }
  return out;
}

}  // namespace

PenaudPair penaud_split(const WeightedPath& path, const WeightSystem& motzkin) {
  if (motzkin.kind() != SystemKind::Motzkin)
    throw Error(ErrorCode::InvalidArgument, "penaud_split needs an M_n(a,b,c,d) weight system");
  if (!motzkin.admits(path, 0)) throw Error(ErrorCode::InvalidPath, "path is not in " + motzkin.name());

  const auto primary = primary_flags(path, motzkin);
  const std::size_t n = path.steps.size();
  PenaudPair out;
  std::size_t i = 0;
  while (i < n) {
    // Longest run of primary steps from i that is a Motzkin path.
    std::size_t end = i;
    int r = 0;
    for (std::size_t j = i; j < n && primary[j]; ++j) {
      r += height_change(path.steps[j].dir);
      if (r < 0) break;
      if (r == 0) end = j + 1;
    }
    if (end > i) {
      out.prefix.steps.insert(out.prefix.steps.end(), path.steps.begin() + static_cast<std::ptrdiff_t>(i),
                              path.steps.begin() + static_cast<std::ptrdiff_t>(end));
      i = end;
    } else {
      out.prefix.steps.push_back(Step{StepDir::Up, MPoly(1)});
      out.core.steps.push_back(path.steps[i]);
      ++i;
    }
  }
  return out;
}

WeightedPath penaud_merge(const WeightedPath& prefix, const WeightedPath& core) {
  for (const auto& s : prefix.steps)
    if (s.dir == StepDir::DLevel) throw Error(ErrorCode::InvalidPath, "prefix contains a double-level step");
  for (const auto& s : core.steps)
    if (s.dir == StepDir::DLevel) throw Error(ErrorCode::InvalidPath, "core contains a double-level step");
  if (!prefix.stays_nonnegative()) throw Error(ErrorCode::InvalidPath, "prefix goes below height 0");
  if (!core.is_motzkin()) throw Error(ErrorCode::InvalidPath, "core is not a Motzkin path");
  if (prefix.final_height() != static_cast<int>(core.steps.size()))
    throw Error(ErrorCode::HeightMismatch, "prefix ends at height " + std::to_string(prefix.final_height()) +
                                               " but the core has length " + std::to_string(core.steps.size()));

  // An up step is unmatched when the path never returns to its start height.
  const auto h = prefix.heights();
  const std::size_t n = prefix.steps.size();
  std::vector<int> suffix_min(n + 1);
  suffix_min[n] = h[n];
  for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(h[i], suffix_min[i + 1]);

  WeightedPath out;
  std::size_t next_core = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = prefix.steps[i];
    if (s.dir == StepDir::Up && suffix_min[i + 1] > h[i]) out.steps.push_back(core.steps[next_core++]);
    else out.steps.push_back(s);
  }
  return out;
}

namespace {

// Index of the first dlevel(-c) or peak up(1) down(c), or npos.
std::size_t first_pattern(const WeightedPath& path, const MPoly& c) {
  const MPoly minus_c = -c;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const auto& s = path.steps[i];
    if (s.dir == StepDir::DLevel && s.weight == minus_c) return i;
    if (s.dir == StepDir::Up && s.weight.is_one() && i + 1 < path.steps.size() &&
        path.steps[i + 1].dir == StepDir::Down && path.steps[i + 1].weight == c)
      return i;
  }
  return std::string::npos;
}

}  // namespace

WeightedPath cfrac2_involution(const WeightedPath& path, const WeightSystem& four_step) {
  const MPoly& c = four_step.c();
  const std::size_t i = first_pattern(path, c);
  if (i == std::string::npos) return path;
  WeightedPath out;
  out.steps.assign(path.steps.begin(), path.steps.begin() + static_cast<std::ptrdiff_t>(i));
  std::size_t rest;
  if (path.steps[i].dir == StepDir::DLevel) {
    out.steps.push_back(Step{StepDir::Up, MPoly(1)});
    out.steps.push_back(Step{StepDir::Down, c});
    rest = i + 1;
  } else {
    out.steps.push_back(Step{StepDir::DLevel, -c});
    rest = i + 2;
  }
  out.steps.insert(out.steps.end(), path.steps.begin() + static_cast<std::ptrdiff_t>(rest), path.steps.end());
  return out;
}

bool cfrac2_is_fixed(const WeightedPath& path, const WeightSystem& four_step) {
  return first_pattern(path, four_step.c()) == std::string::npos;
}

}  // namespace qcross
