#include "paths/weight_system.hpp"

#include <array>
#include <cstdlib>

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {
namespace {

MPoly qp(int e) { return q_pow(static_cast<std::uint32_t>(e)); }

void push(std::vector<MenuEntry>& out, MPoly w, bool primary = false) {
  if (!w.is_zero()) out.push_back(MenuEntry{std::move(w), primary});
}

// {s*q^lo, ..., s*q^hi}
void push_range(std::vector<MenuEntry>& out, const MPoly& s, int lo, int hi) {
  for (int e = lo; e <= hi; ++e) push(out, s * qp(e));
}

}  // namespace

WeightSystem WeightSystem::hermite() { return WeightSystem(SystemKind::Hermite); }
WeightSystem WeightSystem::charlier() { return WeightSystem(SystemKind::Charlier); }
WeightSystem WeightSystem::charlier_star() { return WeightSystem(SystemKind::CharlierStar); }
WeightSystem WeightSystem::laguerre() { return WeightSystem(SystemKind::Laguerre); }
WeightSystem WeightSystem::schroeder() { return WeightSystem(SystemKind::Schroeder); }

WeightSystem WeightSystem::motzkin(MPoly a, MPoly b, MPoly c, MPoly d) {
  WeightSystem s(SystemKind::Motzkin);
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.c_ = std::move(c);
  s.d_ = std::move(d);
  return s;
}

WeightSystem WeightSystem::motzkin_star(MPoly a, MPoly b, MPoly c) {
  WeightSystem s(SystemKind::MotzkinStar);
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.c_ = std::move(c);
  return s;
}

WeightSystem WeightSystem::prefix(MPoly c, MPoly d) {
  WeightSystem s(SystemKind::Prefix);
  s.c_ = std::move(c);
  s.d_ = std::move(d);
  return s;
}

WeightSystem WeightSystem::four_step(MPoly a, MPoly b, MPoly c) {
  WeightSystem s(SystemKind::FourStep);
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.c_ = std::move(c);
  return s;
}

std::string WeightSystem::name() const {
  auto args = [this](std::initializer_list<const MPoly*> ps) {
    std::string out = "(";
    bool first = true;
    for (const auto* p : ps) {
      if (!first) out += ", ";
      out += p->to_string();
      first = false;
    }
    return out + ")";
  };
  switch (kind_) {
    case SystemKind::Hermite: return "hermite";
    case SystemKind::Charlier: return "charlier";
    case SystemKind::CharlierStar: return "charlier*";
    case SystemKind::Laguerre: return "laguerre";
    case SystemKind::Motzkin: return "M" + args({&a_, &b_, &c_, &d_});
    case SystemKind::MotzkinStar: return "M*" + args({&a_, &b_, &c_});
    case SystemKind::Prefix: return "P" + args({&c_, &d_});
    case SystemKind::Schroeder: return "schroeder";
    case SystemKind::FourStep: return "four-step" + args({&a_, &b_, &c_});
  }
  return "?";
}

std::vector<MenuEntry> WeightSystem::menu(StepDir dir, int h) const {
  std::vector<MenuEntry> out;
  if (h < 0 || (dir == StepDir::Down && h == 0)) return out;
  const MPoly y = MPoly::var(Var::y);

  switch (kind_) {
    case SystemKind::Hermite:
      if (dir == StepDir::Up) push(out, 1);
      if (dir == StepDir::Down) push_range(out, 1, 0, h - 1);
      break;
    case SystemKind::Charlier:
      if (dir == StepDir::Up) push(out, y);
      if (dir == StepDir::Level) {
        push(out, y);
        push_range(out, 1, 0, h - 1);
      }
      if (dir == StepDir::Down) push_range(out, 1, 0, h - 1);
      break;
    case SystemKind::CharlierStar:
      if (dir == StepDir::Up) push(out, y);
      if (dir == StepDir::Level) {
        push(out, y * qp(h));
        push_range(out, 1, 0, h - 1);
      }
      if (dir == StepDir::Down) push_range(out, 1, h - 1, 2 * h - 2);
      break;
    case SystemKind::Laguerre:
      if (dir == StepDir::Up) push_range(out, y, 0, h);
      if (dir == StepDir::Level) {
        push_range(out, 1, 0, h - 1);
        push_range(out, y, 0, h);
      }
      if (dir == StepDir::Down) push_range(out, 1, 0, h - 1);
      break;
    case SystemKind::Motzkin:
    case SystemKind::MotzkinStar:
    case SystemKind::FourStep:
      if (dir == StepDir::Up) {
        push(out, 1, true);
        push(out, -qp(h + 1));
      }
      if (dir == StepDir::Level) {
        if (kind_ == SystemKind::Motzkin) push(out, d_, true);
        push(out, (a_ + b_) * qp(h));
      }
      if (dir == StepDir::Down) {
        push(out, c_, true);
        push(out, -(a_ * b_) * qp(h - 1));
      }
      if (dir == StepDir::DLevel && kind_ == SystemKind::FourStep) push(out, -c_);
      break;
    case SystemKind::Prefix:
      if (dir == StepDir::Up) push(out, 1, true);
      if (dir == StepDir::Level) push(out, d_, true);
      if (dir == StepDir::Down) push(out, c_, true);
      break;
    case SystemKind::Schroeder:
      if (dir == StepDir::Up) {
        push(out, 1);
        push(out, -qp(h + 1));
      }
      if (dir == StepDir::Down) push(out, 1);
      if (dir == StepDir::DLevel) push(out, -1);
      break;
  }
  return out;
}

namespace {

constexpr StepDir kDirs[] = {StepDir::Up, StepDir::Level, StepDir::Down, StepDir::DLevel};

const MenuEntry* find_entry(const std::vector<MenuEntry>& menu, const MPoly& w) {
  for (const auto& e : menu)
    if (e.weight == w) return &e;
  return nullptr;
}

}  // namespace

bool WeightSystem::admits(const WeightedPath& path, int end_height) const {
  int h = 0;
  bool prev_primary_up = false;
  for (const auto& s : path.steps) {
    if (s.dir == StepDir::DLevel && !uses_dlevel()) return false;
    const auto m = menu(s.dir, h);
    const MenuEntry* e = find_entry(m, s.weight);
    if (e == nullptr) return false;
    if (forbids_primary_peak() && prev_primary_up && s.dir == StepDir::Down && e->primary) return false;
    prev_primary_up = s.dir == StepDir::Up && e->primary;
    h += height_change(s.dir);
  }
  return end_height == kAnyHeight || h == end_height;
}

bool WeightSystem::admits_prefix(const WeightedPath& path) const { return admits(path, kAnyHeight); }

MPoly gf_paths(const WeightSystem& system, int n, int end_height) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "gf_paths: negative length");
  const bool peaks = system.forbids_primary_peak();
  const bool dlevel = system.uses_dlevel();

  // Menu sums per height, split by the primary flag.
  struct Sums {
    MPoly primary, other;
  };
  std::vector<std::array<Sums, 4>> sums(static_cast<std::size_t>(n + 1));
  for (int h = 0; h <= n; ++h) {
    for (int di = 0; di < 4; ++di) {
      for (const auto& e : system.menu(kDirs[di], h)) {
        auto& slot = sums[static_cast<std::size_t>(h)][static_cast<std::size_t>(di)];
        (e.primary ? slot.primary : slot.other) += e.weight;
      }
    }
  }

  // dp[pos][flag][height]; flag = last step was a primary up.
  using Layer = std::array<std::vector<MPoly>, 2>;
  std::vector<Layer> dp(static_cast<std::size_t>(n + 1));
  for (auto& layer : dp)
    for (auto& row : layer) row.assign(static_cast<std::size_t>(n + 2), MPoly());
  dp[0][0][0] = 1;

  for (int pos = 0; pos < n; ++pos) {
    const int remaining = n - pos;
    for (int flag = 0; flag < 2; ++flag) {
      for (int h = 0; h <= pos; ++h) {
        const MPoly& cur = dp[static_cast<std::size_t>(pos)][static_cast<std::size_t>(flag)][static_cast<std::size_t>(h)];
        if (cur.is_zero()) continue;
        if (end_height != kAnyHeight && std::abs(h - end_height) > remaining) continue;
        const auto& s = sums[static_cast<std::size_t>(h)];
        auto add = [&](int npos, int nflag, int nh, const MPoly& w) {
          if (w.is_zero()) return;
          dp[static_cast<std::size_t>(npos)][static_cast<std::size_t>(nflag)][static_cast<std::size_t>(nh)] += cur * w;
        };
        // up
        add(pos + 1, peaks ? 1 : 0, h + 1, s[0].primary);
        add(pos + 1, 0, h + 1, s[0].other);
        // level
        add(pos + 1, 0, h, s[1].primary + s[1].other);
        // down
        if (h > 0) {
          if (!(peaks && flag == 1)) add(pos + 1, 0, h - 1, s[2].primary);
          add(pos + 1, 0, h - 1, s[2].other);
        }
        if (dlevel && pos + 2 <= n) add(pos + 2, 0, h, s[3].primary + s[3].other);
      }
    }
  }

  MPoly out;
  const auto& last = dp[static_cast<std::size_t>(n)];
  for (int flag = 0; flag < 2; ++flag) {
    for (int h = 0; h <= n; ++h) {
      if (end_height != kAnyHeight && h != end_height) continue;
      out += last[static_cast<std::size_t>(flag)][static_cast<std::size_t>(h)];
    }
  }
  return out;
}

void for_each_path(const WeightSystem& system, int n, int end_height,
                   const std::function<void(const WeightedPath&)>& fn) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "enumerate_paths: negative length");
  if (n > kMaxEnumerateLength)
    throw Error(ErrorCode::TooLarge, "enumerate_paths: length " + std::to_string(n) + " exceeds the guard of " +
                                         std::to_string(kMaxEnumerateLength));
  const bool peaks = system.forbids_primary_peak();
  const bool dlevel = system.uses_dlevel();
  std::vector<std::array<std::vector<MenuEntry>, 4>> menus(static_cast<std::size_t>(n + 1));
  for (int h = 0; h <= n; ++h)
    for (int di = 0; di < 4; ++di) menus[static_cast<std::size_t>(h)][static_cast<std::size_t>(di)] = system.menu(kDirs[di], h);

  WeightedPath path;
  std::function<void(int, int, bool)> rec = [&](int pos, int h, bool prev_primary_up) {
    if (pos == n) {
      if (end_height == kAnyHeight || h == end_height) fn(path);
      return;
    }
    const int remaining = n - pos;
    if (end_height != kAnyHeight && std::abs(h - end_height) > remaining) return;
    for (int di = 0; di < 4; ++di) {
      const StepDir dir = kDirs[di];
      if (dir == StepDir::DLevel && (!dlevel || remaining < 2)) continue;
      for (const auto& e : menus[static_cast<std::size_t>(h)][static_cast<std::size_t>(di)]) {
        if (peaks && prev_primary_up && dir == StepDir::Down && e.primary) continue;
        path.steps.push_back(Step{dir, e.weight});
        rec(pos + step_length(dir), h + height_change(dir), dir == StepDir::Up && e.primary);
        path.steps.pop_back();
      }
    }
  };
  rec(0, 0, false);
}

std::vector<WeightedPath> enumerate_paths(const WeightSystem& system, int n, int end_height) {
  std::vector<WeightedPath> out;
  for_each_path(system, n, end_height, [&](const WeightedPath& p) { out.push_back(p); });
  return out;
}

}  // namespace qcross
