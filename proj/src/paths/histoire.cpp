#include "paths/histoire.hpp"

#include "algebra/qnumbers.hpp"
#include "error.hpp"

namespace qcross {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Charlier: return "charlier";
    case Family::CharlierStar: return "charlier*";
    case Family::Laguerre: return "laguerre";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "hermite") return Family::Hermite;
  if (name == "charlier") return Family::Charlier;
  if (name == "charlier*" || name == "charlier-star" || name == "charlierstar") return Family::CharlierStar;
  if (name == "laguerre") return Family::Laguerre;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

WeightSystem histoire_system(Family f) {
  switch (f) {
    case Family::Hermite: return WeightSystem::hermite();
    case Family::Charlier: return WeightSystem::charlier();
    case Family::CharlierStar: return WeightSystem::charlier_star();
    case Family::Laguerre: return WeightSystem::laguerre();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

ObjectKind object_kind(Family f) noexcept {
  switch (f) {
    case Family::Hermite: return ObjectKind::Matching;
    case Family::Charlier:
    case Family::CharlierStar: return ObjectKind::SetPartition;
    case Family::Laguerre: return ObjectKind::Permutation;
  }
  return ObjectKind::Matching;
}

Weighting object_weighting(Family f) noexcept {
  switch (f) {
    case Family::Hermite: return Weighting::Cro;
    case Family::Charlier: return Weighting::BlocksCro;
    case Family::CharlierStar: return Weighting::BlocksCroStar;
    case Family::Laguerre: return Weighting::WexCro;
  }
  return Weighting::Cro;
}

namespace {

MPoly yq(int ye, int qe) {
  return MPoly::var(Var::y, static_cast<std::uint32_t>(ye)) * q_pow(static_cast<std::uint32_t>(qe));
}

// Arc structure on {1..n}: prev/next along arcs, 0 when absent (1-based).
struct Links {
  std::vector<int> prev, next;
  explicit Links(int n) : prev(static_cast<std::size_t>(n + 1), 0), next(static_cast<std::size_t>(n + 1), 0) {}
  void link(int i, int j) {
    next[static_cast<std::size_t>(i)] = j;
    prev[static_cast<std::size_t>(j)] = i;
  }
  int p(int i) const { return prev[static_cast<std::size_t>(i)]; }
  int nx(int i) const { return next[static_cast<std::size_t>(i)]; }
};

// Openers strictly between l's predecessor and l that are still open after l.
int nesting(const Links& L, int l) {
  int k = 0;
  for (int i = L.p(l) + 1; i < l; ++i)
    if (L.nx(i) > l) ++k;
  return k;
}

struct Event {
  bool closes = false;
  int k = 0;
  bool opens = false;
};

// Rebuilds the arcs from the closing choices: a closer with parameter k
// pairs with the (k+1)-th most recent active opener.
Links decode(const std::vector<Event>& events) {
  const int n = static_cast<int>(events.size());
  Links L(n);
  std::vector<int> active;
  for (int i = 1; i <= n; ++i) {
    const auto& e = events[static_cast<std::size_t>(i - 1)];
    if (e.closes) {
      const int h = static_cast<int>(active.size());
      if (e.k < 0 || e.k >= h)
        throw Error(ErrorCode::InvalidHistoire, "step " + std::to_string(i) + " closes nothing at k=" + std::to_string(e.k));
      const auto it = active.begin() + (h - 1 - e.k);
      L.link(*it, i);
      active.erase(it);
    }
    if (e.opens) active.push_back(i);
  }
  if (!active.empty()) throw Error(ErrorCode::InvalidHistoire, "arcs left open at the end of the path");
  return L;
}

// Reads a weight of the form y^ye q^qe.
bool read_monomial(const MPoly& w, int& ye, int& qe) {
  if (!w.is_monomial()) return false;
  const auto& [exps, coeff] = *w.terms().begin();
  if (coeff != 1) return false;
  for (std::size_t v = 0; v < kNumVars; ++v)
    if (v != static_cast<std::size_t>(Var::q) && v != static_cast<std::size_t>(Var::y) && exps[v] != 0) return false;
  ye = static_cast<int>(exps[static_cast<std::size_t>(Var::y)]);
  qe = static_cast<int>(exps[static_cast<std::size_t>(Var::q)]);
  return true;
}

void check_menus(const WeightedPath& path, Family f) {
  const auto sys = histoire_system(f);
  int h = 0;
  int idx = 0;
  for (const auto& s : path.steps) {
    ++idx;
    bool ok = false;
    for (const auto& e : sys.menu(s.dir, h))
      if (e.weight == s.weight) ok = true;
    if (!ok)
      throw Error(ErrorCode::InvalidHistoire, std::string("step ") + std::to_string(idx) + " (" + step_dir_name(s.dir) +
                                                  ", " + s.weight.to_string() + ") is not in the " + family_name(f) +
                                                  " menu at height " + std::to_string(h));
    h += height_change(s.dir);
  }
  if (h != 0) throw Error(ErrorCode::InvalidHistoire, "path ends at height " + std::to_string(h));
}

WeightedPath partition_histoire(const Links& L, int n, bool star) {
  WeightedPath path;
  int h = 0;
  for (int i = 1; i <= n; ++i) {
    const bool has_prev = L.p(i) != 0, has_next = L.nx(i) != 0;
    if (!has_prev && has_next) {
      path.steps.push_back({StepDir::Up, yq(1, 0)});
      ++h;
    } else if (!has_prev) {
      path.steps.push_back({StepDir::Level, star ? yq(1, h) : yq(1, 0)});
    } else if (has_next) {
      path.steps.push_back({StepDir::Level, yq(0, nesting(L, i))});
    } else {
      path.steps.push_back({StepDir::Down, yq(0, nesting(L, i) + (star ? h - 1 : 0))});
      --h;
    }
  }
  return path;
}

SetPartition partition_from_links(const Links& L, int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) {
    if (L.p(i) != 0) continue;
    std::vector<int> b;
    for (int j = i; j != 0; j = L.nx(j)) b.push_back(j);
    blocks.push_back(std::move(b));
  }
  return SetPartition::from_blocks(n, std::move(blocks));
}

CombObject decode_matching(const WeightedPath& path) {
  std::vector<Event> ev;
  for (const auto& s : path.steps) {
    int ye = 0, qe = 0;
    read_monomial(s.weight, ye, qe);
    if (s.dir == StepDir::Up) ev.push_back({false, 0, true});
    else ev.push_back({true, qe, false});
  }
  const auto L = decode(ev);
  const int n = static_cast<int>(ev.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    if (L.nx(i) != 0) pairs.emplace_back(i, L.nx(i));
  return Matching::from_pairs(n, pairs);
}

CombObject decode_partition(const WeightedPath& path, bool star) {
  std::vector<Event> ev;
  int h = 0;
  for (const auto& s : path.steps) {
    int ye = 0, qe = 0;
    read_monomial(s.weight, ye, qe);
    switch (s.dir) {
      case StepDir::Up: ev.push_back({false, 0, true}); break;
      case StepDir::Level:
        if (ye == 1) ev.push_back({false, 0, false});
        else ev.push_back({true, qe, true});
        break;
      case StepDir::Down: ev.push_back({true, star ? qe - (h - 1) : qe, false}); break;
      case StepDir::DLevel: break;
    }
    h += height_change(s.dir);
  }
  const int n = static_cast<int>(ev.size());
  return partition_from_links(decode(ev), n);
}

CombObject decode_permutation(const WeightedPath& path) {
  const int n = static_cast<int>(path.steps.size());
  // Upper arcs i -> sigma(i) > i, read left to right.
  std::vector<Event> upper(static_cast<std::size_t>(n));
  // Lower arcs sigma(i) < i, read right to left (index r = n+1-i).
  std::vector<Event> lower(static_cast<std::size_t>(n));
  std::vector<bool> fixed(static_cast<std::size_t>(n + 1), false);
  for (int i = 1; i <= n; ++i) {
    const auto& s = path.steps[static_cast<std::size_t>(i - 1)];
    int ye = 0, qe = 0;
    read_monomial(s.weight, ye, qe);
    auto& up = upper[static_cast<std::size_t>(i - 1)];
    auto& lo = lower[static_cast<std::size_t>(n - i)];
    switch (s.dir) {
      case StepDir::Up:
        up = {false, 0, true};
        lo = {true, qe, false};
        break;
      case StepDir::Down:
        up = {true, qe, false};
        lo = {false, 0, true};
        break;
      case StepDir::Level:
        if (ye == 1 && qe == 0) {
          fixed[static_cast<std::size_t>(i)] = true;
        } else if (ye == 1) {
          up = {true, qe - 1, true};
        } else {
          lo = {true, qe, true};
        }
        break;
      case StepDir::DLevel: break;
    }
  }
  const auto U = decode(upper);
  const auto Lo = decode(lower);
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    if (fixed[static_cast<std::size_t>(i)]) image[static_cast<std::size_t>(i - 1)] = i;
    if (U.nx(i) != 0) image[static_cast<std::size_t>(i - 1)] = U.nx(i);
    const int r = n + 1 - i;
    if (Lo.p(r) != 0) {
      const int j = n + 1 - Lo.p(r);
      image[static_cast<std::size_t>(j - 1)] = i;
    }
  }
  return Permutation::from_image(std::move(image));
}

}  // namespace

MPoly object_weight(const CombObject& obj, Family f) {
  switch (f) {
    case Family::Hermite: return yq(0, cro_matching(std::get<Matching>(obj)));
    case Family::Charlier: {
      const auto& p = std::get<SetPartition>(obj);
      return yq(p.block_count(), cro_partition(p));
    }
    case Family::CharlierStar: {
      const auto& p = std::get<SetPartition>(obj);
      return yq(p.block_count(), cro_star_partition(p));
    }
    case Family::Laguerre: {
      const auto st = perm_stats(std::get<Permutation>(obj));
      return yq(st.wex, st.cro);
    }
  }
  return MPoly(1);
}

WeightedPath histoire_of(const Matching& m) {
  const int n = m.ground_size();
  Links L(n);
  for (const auto& [i, j] : m.arcs()) L.link(i, j);
  WeightedPath path;
  for (int i = 1; i <= n; ++i) {
    if (L.nx(i) != 0) path.steps.push_back({StepDir::Up, MPoly(1)});
    else path.steps.push_back({StepDir::Down, yq(0, nesting(L, i))});
  }
  return path;
}

WeightedPath histoire_of(const SetPartition& p, bool star) {
  Links L(p.n);
  for (const auto& [i, j] : p.arcs()) L.link(i, j);
  return partition_histoire(L, p.n, star);
}

WeightedPath histoire_of(const Permutation& s) {
  const int n = s.size();
  Links U(n), Lo(n);
  for (int i = 1; i <= n; ++i) {
    const int t = s.image[static_cast<std::size_t>(i - 1)];
    if (t > i) U.link(i, t);
    if (t < i) Lo.link(n + 1 - i, n + 1 - t);
  }
  WeightedPath path;
  for (int i = 1; i <= n; ++i) {
    const int r = n + 1 - i;
    const bool up_prev = U.p(i) != 0, up_next = U.nx(i) != 0;
    if (s.image[static_cast<std::size_t>(i - 1)] == i) {
      path.steps.push_back({StepDir::Level, yq(1, 0)});
    } else if (!up_prev && up_next) {
      // i closes a lower arc when read right to left.
      path.steps.push_back({StepDir::Up, yq(1, nesting(Lo, r))});
    } else if (up_prev && !up_next) {
      path.steps.push_back({StepDir::Down, yq(0, nesting(U, i))});
    } else if (up_prev) {
      path.steps.push_back({StepDir::Level, yq(1, 1 + nesting(U, i))});
    } else {
      path.steps.push_back({StepDir::Level, yq(0, nesting(Lo, r))});
    }
  }
  return path;
}

WeightedPath histoire_of(const CombObject& obj, Family f) {
  switch (f) {
    case Family::Hermite:
      if (const auto* m = std::get_if<Matching>(&obj)) return histoire_of(*m);
      break;
    case Family::Charlier:
    case Family::CharlierStar:
      if (const auto* p = std::get_if<SetPartition>(&obj)) return histoire_of(*p, f == Family::CharlierStar);
      break;
    case Family::Laguerre:
      if (const auto* s = std::get_if<Permutation>(&obj)) return histoire_of(*s);
      break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string("object kind does not match family ") + family_name(f));
}

CombObject object_of(const WeightedPath& path, Family f) {
  check_menus(path, f);
  CombObject obj;
  switch (f) {
    case Family::Hermite: obj = decode_matching(path); break;
    case Family::Charlier: obj = decode_partition(path, false); break;
    case Family::CharlierStar: obj = decode_partition(path, true); break;
    case Family::Laguerre: obj = decode_permutation(path); break;
  }
  if (!(histoire_of(obj, f) == path))
    throw Error(ErrorCode::InvalidHistoire, std::string("path is not a ") + family_name(f) + " histoire");
  return obj;
}

}  // namespace qcross
