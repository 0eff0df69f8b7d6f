#include "objects/objects.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "error.hpp"

namespace qcross {
namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::Parse, std::string(what) + ": cannot parse '" + std::string(text) + "'");
}

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) parse_fail(what, text);
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int count_crossings(const std::vector<std::pair<int, int>>& arcs) {
  int count = 0;
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t z = 0; z < arcs.size(); ++z) {
      const auto [i, j] = arcs[x];
      const auto [k, l] = arcs[z];
      if (i < k && k < j && j < l) ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<std::pair<int, int>> Matching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= ground_size(); ++i)
    if (partner[static_cast<std::size_t>(i - 1)] > i) out.emplace_back(i, partner[static_cast<std::size_t>(i - 1)]);
  return out;
}

Matching Matching::from_pairs(int ground_size, const std::vector<std::pair<int, int>>& pairs) {
  if (ground_size < 0 || ground_size % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "Matching: ground set size must be even");
  Matching m;
  m.partner.assign(static_cast<std::size_t>(ground_size), 0);
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j < 1 || i > ground_size || j > ground_size || i == j)
      throw Error(ErrorCode::InvalidArgument, "Matching: bad pair " + std::to_string(i) + "-" + std::to_string(j));
    auto& pi = m.partner[static_cast<std::size_t>(i - 1)];
    auto& pj = m.partner[static_cast<std::size_t>(j - 1)];
    if (pi != 0 || pj != 0) throw Error(ErrorCode::InvalidArgument, "Matching: element used twice");
    pi = j;
    pj = i;
  }
  if (std::count(m.partner.begin(), m.partner.end(), 0) != 0)
    throw Error(ErrorCode::InvalidArgument, "Matching: not every element is matched");
  return m;
}

Matching Matching::parse(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  for (auto part : split(text, ',')) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty()) {
      if (text.find_first_not_of(' ') == std::string_view::npos) break;
      parse_fail("matching", text);
    }
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) parse_fail("matching", text);
    const auto lhs = parse_ints(part.substr(0, dash), "matching");
    const auto rhs = parse_ints(part.substr(dash + 1), "matching");
    if (lhs.size() != 1 || rhs.size() != 1) parse_fail("matching", text);
    pairs.emplace_back(lhs[0], rhs[0]);
  }
  return from_pairs(static_cast<int>(pairs.size()) * 2, pairs);
}

std::string Matching::to_string() const {
  std::string out;
  for (const auto& [i, j] : arcs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + '-' + std::to_string(j);
  }
  return out;
}

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<int> seen(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (auto& block : blocks) {
    if (block.empty()) throw Error(ErrorCode::InvalidArgument, "SetPartition: empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]++)
        throw Error(ErrorCode::InvalidArgument, "SetPartition: element " + std::to_string(x) + " invalid or repeated");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0)
    throw Error(ErrorCode::InvalidArgument, "SetPartition: blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end(), [](const auto& l, const auto& r) { return l.front() < r.front(); });
  return SetPartition{n, std::move(blocks)};
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return SetPartition{};
  for (auto part : split(text, '|')) {
    auto block = parse_ints(part, "partition");
    if (block.empty()) parse_fail("partition", text);
    for (int x : block) n = std::max(n, x);
    blocks.push_back(std::move(block));
  }
  return from_blocks(n, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> SetPartition::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : blocks)
    for (std::size_t i = 0; i + 1 < block.size(); ++i) out.emplace_back(block[i], block[i + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::from_image(std::vector<int> image) {
  const auto n = image.size();
  std::vector<int> seen(n, 0);
  for (int v : image) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]++)
      throw Error(ErrorCode::InvalidArgument, "Permutation: not a bijection on {1..n}");
  }
  return Permutation{std::move(image)};
}

Permutation Permutation::parse(std::string_view text) { return from_image(parse_ints(text, "permutation")); }

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(image[i]);
  }
  return out;
}

int cro_matching(const Matching& m) { return count_crossings(m.arcs()); }

int cro_partition(const SetPartition& p) { return count_crossings(p.arcs()); }

int cro_star_partition(const SetPartition& p) {
  const auto arcs = p.arcs();
  int count = count_crossings(arcs);
  for (const auto& block : p.blocks) {
    const int i = block.back();
    for (const auto& [k, l] : arcs)
      if (k < i && i < l) ++count;
  }
  return count;
}

PermStats perm_stats(const Permutation& s) {
  PermStats out;
  const int n = s.size();
  const auto& sg = s.image;
  for (int i = 1; i <= n; ++i) {
    const int si = sg[static_cast<std::size_t>(i - 1)];
    if (si >= i) ++out.wex;
    for (int k = i + 1; k <= n; ++k) {
      const int sk = sg[static_cast<std::size_t>(k - 1)];
      if ((k <= si && si < sk) || (si < sk && sk < i)) ++out.cro;
    }
  }
  return out;
}

}  // namespace qcross
