#include "decomp/core_word.hpp"

#include <algorithm>

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {
namespace {

int delta(char c) { return c == 'x' ? 1 : (c == 'y' || c == 'Y') ? -1 : 0; }

// Motzkin-shape problems only (letters, heights, return to 0).
std::string shape_violation(const std::string& s) {
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c != 'x' && c != 'y' && c != 'Y' && c != 'z')
      return "letter '" + std::string(1, c) + "' at position " + std::to_string(i + 1) + " is not one of x, y, Y, z";
    h += delta(c);
    if (h < 0) return "word goes below height 0 at position " + std::to_string(i + 1);
  }
  if (h != 0) return "word ends at height " + std::to_string(h);
  return {};
}

void require_C(const CoreWord& w) {
  const auto why = core_word_violation(w);
  if (!why.empty()) throw Error(ErrorCode::NotInC, "'" + w.letters + "' is not in C_{j,k}: " + why);
}

}  // namespace

CoreWord CoreWord::parse(std::string_view text) {
  CoreWord w;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c != 'x' && c != 'y' && c != 'Y' && c != 'z')
      throw Error(ErrorCode::Parse, "core word letter '" + std::string(1, c) + "' is not one of x, y, Y, z");
    w.letters.push_back(c);
  }
  return w;
}

int CoreWord::j() const noexcept { return static_cast<int>(std::count(letters.begin(), letters.end(), 'x')); }

int CoreWord::k() const noexcept { return j() + static_cast<int>(std::count(letters.begin(), letters.end(), 'z')); }

WeightedPath CoreWord::to_path() const {
  WeightedPath p;
  int h = 0;
  for (char c : letters) {
    const MPoly neg = -q_pow(static_cast<std::uint32_t>(std::max(h, 0)));
    switch (c) {
      case 'x': p.steps.push_back({StepDir::Up, MPoly(1)}); break;
      case 'y': p.steps.push_back({StepDir::Down, MPoly(1)}); break;
      case 'Y': p.steps.push_back({StepDir::Down, neg}); break;
      default: p.steps.push_back({StepDir::Level, neg}); break;
    }
    h += delta(c);
  }
  return p;
}

MPoly CoreWord::weight() const { return to_path().weight(); }

std::string core_word_violation(const CoreWord& w) {
  auto why = shape_violation(w.letters);
  if (!why.empty()) return why;
  const auto xy = w.letters.find("xy");
  if (xy != std::string::npos) return "peak xy at position " + std::to_string(xy + 1);
  return {};
}

bool in_C(const CoreWord& w) { return core_word_violation(w).empty(); }

UV uv_stats(const CoreWord& w) {
  for (char c : w.letters)
    if (c != 'x' && c != 'y' && c != 'Y' && c != 'z')
      throw Error(ErrorCode::Parse, "core word letter '" + std::string(1, c) + "' is not one of x, y, Y, z");
  const std::string& s = w.letters;
  UV out;
  const auto last_x = s.rfind('x');
  if (last_x != std::string::npos) {
    std::size_t start = last_x;
    while (start > 0 && s[start - 1] == 'x') --start;
    out.u = static_cast<int>(last_x - start + 1);
  }
  const auto last_y = s.rfind('y');
  if (last_y != std::string::npos && (last_x == std::string::npos || last_x < last_y)) {
    int h = 0;
    for (std::size_t i = 0; i < last_y; ++i) h += delta(s[i]);
    out.v = h;
  } else {
    out.v = w.j();
  }
  return out;
}

CoreWord theta(const CoreWord& w) {
  require_C(w);
  const int j = w.j();
  const UV uv = uv_stats(w);
  if (uv.u == j && uv.v == j) return w;
  const std::string& s = w.letters;

  if (uv.v <= uv.u) {
    // Turn the last y into Y, then c~ = f1 x^u a y^l f2 -> f1 x^{u-v} a y^l x^v f2.
    std::string t = s;
    t[t.rfind('y')] = 'Y';
    const std::size_t run_end = t.rfind('x') + 1;
    const std::size_t run_start = run_end - static_cast<std::size_t>(uv.u);
    std::size_t pos = run_end;
    if (pos >= t.size() || (t[pos] != 'z' && t[pos] != 'Y'))
      throw Error(ErrorCode::NotInC, "'" + s + "': no z or Y follows the last run of x");
    ++pos;
    while (pos < t.size() && t[pos] == 'y') ++pos;
    const std::string f1 = t.substr(0, run_start);
    const std::string ay = t.substr(run_end, pos - run_end);
    const std::string f2 = t.substr(pos);
    return CoreWord{f1 + std::string(static_cast<std::size_t>(uv.u - uv.v), 'x') + ay +
                    std::string(static_cast<std::size_t>(uv.v), 'x') + f2};
  }

  // u < v: turn the last Y starting at height u (after the last x) into y,
  // then c~ = f1 a y^l x^u f2 -> f1 x^u a y^l f2.
  std::string t = s;
  const std::size_t run_end = t.rfind('x') + 1;
  const std::size_t run_start = run_end - static_cast<std::size_t>(uv.u);
  int h = 0;
  std::size_t target = std::string::npos;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i >= run_end && t[i] == 'Y' && h == uv.u) target = i;
    h += delta(t[i]);
  }
  if (target == std::string::npos)
    throw Error(ErrorCode::NotInC, "'" + s + "': no Y starts at height " + std::to_string(uv.u) + " after the last x");
  t[target] = 'y';
  std::size_t a = run_start;
  while (a > 0 && t[a - 1] == 'y') --a;
  if (a == 0 || (t[a - 1] != 'z' && t[a - 1] != 'Y'))
    throw Error(ErrorCode::NotInC, "'" + s + "': no z or Y precedes the y-run before the last x");
  --a;
  const std::string f1 = t.substr(0, a);
  const std::string ay = t.substr(a, run_start - a);
  const std::string f2 = t.substr(run_end);
  return CoreWord{f1 + std::string(static_cast<std::size_t>(uv.u), 'x') + ay + f2};
}

void for_each_core_word(int j, int k, const std::function<void(const CoreWord&)>& fn) {
  if (j < 0 || k < j) return;
  const int len = j + k;
  const int levels = k - j;
  std::string cur;
  std::function<void(int, int, int, int)> rec = [&](int h, int xs, int downs, int zs) {
    if (static_cast<int>(cur.size()) == len) {
      if (h == 0) fn(CoreWord{cur});
      return;
    }
    const int remaining = len - static_cast<int>(cur.size());
    if (h > remaining) return;
    const char prev = cur.empty() ? '\0' : cur.back();
    auto step = [&](char c, int nh, int nx, int nd, int nz) {
      cur.push_back(c);
      rec(nh, nx, nd, nz);
      cur.pop_back();
    };
    if (xs < j) step('x', h + 1, xs + 1, downs, zs);
    if (h > 0 && downs < j) {
      if (prev != 'x') step('y', h - 1, xs, downs + 1, zs);
      step('Y', h - 1, xs, downs + 1, zs);
    }
    if (zs < levels) step('z', h, xs, downs, zs + 1);
  };
  rec(0, 0, 0, 0);
}

}  // namespace qcross
