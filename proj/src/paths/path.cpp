#include "paths/path.hpp"

#include <cctype>

#include "algebra/mpoly_json.hpp"
#include "error.hpp"

namespace qcross {

const char* step_dir_name(StepDir dir) noexcept {
  switch (dir) {
    case StepDir::Up: return "up";
    case StepDir::Down: return "down";
    case StepDir::Level: return "level";
    case StepDir::DLevel: return "dlevel";
  }
  return "?";
}

int height_change(StepDir dir) noexcept {
  switch (dir) {
    case StepDir::Up: return 1;
    case StepDir::Down: return -1;
    default: return 0;
  }
}

int step_length(StepDir dir) noexcept { return dir == StepDir::DLevel ? 2 : 1; }

int WeightedPath::length() const noexcept {
  int len = 0;
  for (const auto& s : steps) len += step_length(s.dir);
  return len;
}

std::vector<int> WeightedPath::heights() const {
  std::vector<int> out;
  out.reserve(steps.size() + 1);
  int h = 0;
  out.push_back(h);
  for (const auto& s : steps) {
    h += height_change(s.dir);
    out.push_back(h);
  }
  return out;
}

int WeightedPath::final_height() const noexcept {
  int h = 0;
  for (const auto& s : steps) h += height_change(s.dir);
  return h;
}

bool WeightedPath::stays_nonnegative() const {
  int h = 0;
  for (const auto& s : steps) {
    h += height_change(s.dir);
    if (h < 0) return false;
  }
  return true;
}

MPoly WeightedPath::weight() const {
  MPoly out(1);
  for (const auto& s : steps) out *= s.weight;
  return out;
}

MPoly path_weight(const WeightedPath& path) { return path.weight(); }

namespace {

const char* compact_letter(StepDir dir) {
  switch (dir) {
    case StepDir::Up: return "U";
    case StepDir::Down: return "D";
    case StepDir::Level: return "L";
    case StepDir::DLevel: return "LL";
  }
  return "?";
}

StepDir dir_from_name(const std::string& name) {
  if (name == "up") return StepDir::Up;
  if (name == "down") return StepDir::Down;
  if (name == "level") return StepDir::Level;
  if (name == "dlevel") return StepDir::DLevel;
  throw Error(ErrorCode::Parse, "unknown step direction '" + name + "'");
}

}  // namespace

std::string WeightedPath::to_compact() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += compact_letter(s.dir);
    out += '(' + s.weight.to_string() + ')';
  }
  return out;
}

WeightedPath WeightedPath::parse_compact(std::string_view text) {
  WeightedPath path;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    StepDir dir;
    if (text.substr(pos, 2) == "LL") {
      dir = StepDir::DLevel;
      pos += 2;
    } else {
      switch (text[pos]) {
        case 'U': dir = StepDir::Up; break;
        case 'D': dir = StepDir::Down; break;
        case 'L': dir = StepDir::Level; break;
        default:
          throw Error(ErrorCode::Parse, "compact path: unexpected '" + std::string(1, text[pos]) + "' at offset " +
                                            std::to_string(pos));
      }
      ++pos;
    }
    skip();
    if (pos >= text.size() || text[pos] != '(') throw Error(ErrorCode::Parse, "compact path: expected '(' after step");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::Parse, "compact path: missing ')'");
    path.steps.push_back(Step{dir, MPoly::parse(text.substr(pos + 1, close - pos - 1))});
    pos = close + 1;
    skip();
  }
  return path;
}

nlohmann::json to_json(const WeightedPath& path) {
  auto steps = nlohmann::json::array();
  for (const auto& s : path.steps) steps.push_back({{"dir", step_dir_name(s.dir)}, {"weight", to_json(s.weight)}});
  return {{"steps", steps}};
}

WeightedPath path_from_json(const nlohmann::json& j) {
  try {
    WeightedPath path;
    for (const auto& s : j.at("steps")) {
      const auto& w = s.at("weight");
      MPoly weight = w.is_string() ? MPoly::parse(w.get<std::string>()) : mpoly_from_json(w);
      path.steps.push_back(Step{dir_from_name(s.at("dir").get<std::string>()), std::move(weight)});
    }
    return path;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, std::string("malformed path JSON: ") + ex.what());
  }
}

WeightedPath parse_path_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::Parse, std::string("path JSON: ") + ex.what());
    }
    return path_from_json(j);
  }
  return WeightedPath::parse_compact(text);
}

}  // namespace qcross
