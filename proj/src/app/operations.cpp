#include "app/operations.hpp"

#include "algebra/mpoly_json.hpp"
#include "decomp/core_word.hpp"
#include "decomp/penaud.hpp"
#include "error.hpp"
#include "formulas/closed_forms.hpp"
#include "formulas/inverse.hpp"
#include "formulas/kseries.hpp"
#include "objects/brute_gf.hpp"
#include "paths/specialization.hpp"
#include "paths/weight_system.hpp"
#include "verify/sweeps.hpp"

namespace qcross {
namespace {

void guard(bool unsafe, int value, int limit, const std::string& what) {
  if (!unsafe && value > limit)
    throw Error(ErrorCode::GuardExceeded, what + " " + std::to_string(value) + " exceeds the limit " +
                                              std::to_string(limit) + " (pass --unsafe-n to override)");
}

void need_nonnegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be nonnegative");
}

nlohmann::ordered_json path_json(const WeightedPath& p) {
  nlohmann::ordered_json j;
  j["compact"] = p.to_compact();
  j["length"] = p.length();
  j["weight"] = p.weight().to_string();
  j["path"] = to_json(p);
  return j;
}

CombObject parse_object(Family f, std::string_view text) {
  switch (object_kind(f)) {
    case ObjectKind::Matching: return Matching::parse(text);
    case ObjectKind::SetPartition: return SetPartition::parse(text);
    case ObjectKind::Permutation: return Permutation::parse(text);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown object kind");
}

std::string object_text(const CombObject& obj) {
  return std::visit([](const auto& o) { return o.to_string(); }, obj);
}

}  // namespace

MomentMethod parse_moment_method(std::string_view name) {
  if (name == "brute") return MomentMethod::Brute;
  if (name == "paths") return MomentMethod::Paths;
  if (name == "formula") return MomentMethod::Formula;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "' (brute, paths, formula)");
}

MPoly compute_moment(Family f, int n, MomentMethod method, unsigned jobs, bool unsafe) {
  need_nonnegative(n, "--n");
  switch (method) {
    case MomentMethod::Brute: {
      const int limit = brute_guard(f);
      guard(unsafe, n, limit, std::string("brute force for ") + family_name(f) + " at n");
      return brute_gf(object_kind(f), n, object_weighting(f), jobs);
    }
    case MomentMethod::Paths:
      guard(unsafe, n, kMaxFormulaN, "path sum at n");
      return gf_paths(histoire_system(f), specialization_of(f).path_length(f, n));
    case MomentMethod::Formula:
      guard(unsafe, n, kMaxFormulaN, "closed form at n");
      return closed_form_moment(f, n);
  }
  return MPoly();
}

MPoly compute_formula(std::string_view name, int n, int k, bool unsafe) {
  need_nonnegative(n, "--n");
  guard(unsafe, n, kMaxFormulaN, "closed form at n");
  auto need_k = [&] {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + " needs --k");
  };
  if (name == "schroeder") return schroeder_b(n);
  if (name == "qstirling") return need_k(), q_stirling(n, k);
  if (name == "trinomial") return need_k(), prefix_count_trinomial(n, k);
  if (name == "ballot") return need_k(), MPoly(prefix_count_ballot(n, k));
  if (name == "prefix") return need_k(), prefix_gf_motzkin(n, k);
  if (name == "touchard") return touchard_riordan(n);
  const Family f = parse_family(name);
  if (k < 0) return closed_form_moment(f, n);
  switch (f) {
    case Family::Charlier: return charlier_crossings(n, k);
    case Family::CharlierStar: return charlier_star(n, k);
    default: throw Error(ErrorCode::InvalidArgument, std::string("--k applies to charlier and charlier* only"));
  }
}

MPoly compute_expansion(Family f, int order, std::string_view method, bool symbolic, bool unsafe) {
  need_nonnegative(order, "--order");
  guard(unsafe, order, kMaxExpandOrder, "series order");
  const auto o = static_cast<std::uint32_t>(order);
  const KParams p = k_family_params(f, symbolic);
  if (method == "cf") return k_series_cf(p, o).to_poly();
  if (method == "hypergeometric") return k_series_hypergeometric(p, o).to_poly();
  if (method == "functional") return functional_equation_solve(p, o).to_poly();
  if (method == "closed") {
    MPoly s = k_series_closed(f, o).to_poly();
    if (!symbolic) {
      const MPoly y1q = MPoly::var(Var::y) * (MPoly(1) - MPoly::var(Var::q));
      if (f == Family::Charlier) s = s.substitute(Var::c, y1q);
      if (f == Family::CharlierStar) s = s.substitute(Var::b, y1q);
    }
    return s;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown method '" + std::string(method) + "' (cf, closed, hypergeometric, functional)");
}

nlohmann::ordered_json decompose_path(std::string_view path_text, std::optional<Family> family) {
  const WeightedPath path = parse_path_text(path_text);
  WeightSystem m = WeightSystem::motzkin(MPoly::var(Var::a), MPoly::var(Var::b), MPoly::var(Var::c), MPoly::var(Var::d));
  if (family) {
    const auto s = specialization_of(*family);
    m = WeightSystem::motzkin(s.a, s.b, s.c, s.d);
  }
  const PenaudPair pair = penaud_split(path, m);
  nlohmann::ordered_json j;
  j["system"] = m.name();
  j["n"] = path.length();
  j["k"] = pair.k();
  j["input"] = path_json(path);
  j["prefix"] = path_json(pair.prefix);
  j["core"] = path_json(pair.core);
  return j;
}

nlohmann::ordered_json histoire_of_text(Family f, std::string_view text) {
  const CombObject obj = parse_object(f, text);
  const WeightedPath p = histoire_of(obj, f);
  nlohmann::ordered_json j;
  j["family"] = family_name(f);
  j["object"] = object_text(obj);
  j["histoire"] = path_json(p);
  return j;
}

nlohmann::ordered_json object_of_text(Family f, std::string_view path_text) {
  const WeightedPath p = parse_path_text(path_text);
  const CombObject obj = object_of(p, f);
  nlohmann::ordered_json j;
  j["family"] = family_name(f);
  j["object"] = object_text(obj);
  j["histoire"] = path_json(p);
  return j;
}

nlohmann::ordered_json theta_of_text(std::string_view word) {
  const CoreWord w = CoreWord::parse(word);
  const CoreWord t = theta(w);
  auto side = [](const CoreWord& c) {
    nlohmann::ordered_json s;
    const UV uv = uv_stats(c);
    s["word"] = c.letters;
    s["u"] = uv.u;
    s["v"] = uv.v;
    s["weight"] = c.weight().to_string();
    return s;
  };
  nlohmann::ordered_json j;
  j["j"] = w.j();
  j["k"] = w.k();
  j["fixed"] = t == w;
  j["input"] = side(w);
  j["image"] = side(t);
  return j;
}

std::string emit_table(std::string_view kind, int from, int max_n, std::string_view format, bool unsafe) {
  need_nonnegative(from, "--from");
  guard(unsafe, max_n, kMaxFormulaN, "table size");
  if (format != "csv" && format != "json")
    throw Error(ErrorCode::InvalidArgument, "unknown table format '" + std::string(format) + "' (csv, json)");

  struct Row {
    int n, k;
    std::string value;
  };
  std::vector<Row> rows;
  bool per_k = true;
  for (int n = from; n <= max_n; ++n) {
    if (kind == "touchard" || kind == "laguerre") {
      per_k = false;
      rows.push_back({n, -1, (kind == "touchard" ? touchard_riordan(n) : laguerre_moment(n)).to_string()});
      continue;
    }
    for (int k = 0; k <= n; ++k) {
      if (kind == "charlier")
        rows.push_back({n, k, charlier_crossings(n, k).to_string()});
      else if (kind == "charlier*")
        rows.push_back({n, k, charlier_star(n, k).to_string()});
      else if (kind == "qstirling")
        rows.push_back({n, k, q_stirling(n, k).to_string()});
      else if (kind == "ballot") {
        if ((n - k) % 2 == 0) rows.push_back({n, k, prefix_count_ballot(n, k).get_str()});
      } else if (kind == "prefix")
        rows.push_back({n, k, prefix_count_trinomial(n, k).to_string()});
      else
        throw Error(ErrorCode::InvalidArgument, "unknown table kind '" + std::string(kind) + "'");
    }
  }
  if (kind == "touchard" || kind == "laguerre") per_k = false;
  else if (kind != "charlier" && kind != "charlier*" && kind != "qstirling" && kind != "ballot" && kind != "prefix")
    throw Error(ErrorCode::InvalidArgument, "unknown table kind '" + std::string(kind) + "'");

  if (format == "csv") {
    std::string out = per_k ? "n,k,value\n" : "n,value\n";
    for (const auto& r : rows)
      out += std::to_string(r.n) + "," + (per_k ? std::to_string(r.k) + "," : "") + r.value + "\n";
    return out;
  }
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    if (per_k) row["k"] = r.k;
    row["value"] = r.value;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace qcross
