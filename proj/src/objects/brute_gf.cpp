#include "objects/brute_gf.hpp"

#include <thread>
#include <vector>

#include "error.hpp"
#include "objects/enumerate.hpp"

namespace qcross {
namespace {

// tally[y_exp * stride + q_exp]
struct Tally {
  int stride;
  std::vector<std::uint64_t> counts;

  Tally(int max_y, int max_q) : stride(max_q + 1), counts(static_cast<std::size_t>((max_y + 1) * (max_q + 1)), 0) {}
  void add(int y_exp, int q_exp) { ++counts[static_cast<std::size_t>(y_exp * stride + q_exp)]; }
};

void sweep(ObjectKind kind, int n, Weighting weighting, Shard shard, Tally& tally) {
  switch (kind) {
    case ObjectKind::Matching:
      for_each_matching(n, [&](const Matching& m) { tally.add(0, cro_matching(m)); }, shard);
      break;
    case ObjectKind::SetPartition:
      for_each_set_partition(
          n,
          [&](const SetPartition& p) {
            const int cro = weighting == Weighting::BlocksCroStar ? cro_star_partition(p) : cro_partition(p);
            tally.add(p.block_count(), cro);
          },
          shard);
      break;
    case ObjectKind::Permutation:
      for_each_permutation(
          n,
          [&](const Permutation& s) {
            const auto st = perm_stats(s);
            tally.add(st.wex, st.cro);
          },
          shard);
      break;
  }
}

bool compatible(ObjectKind kind, Weighting weighting) {
  switch (kind) {
    case ObjectKind::Matching: return weighting == Weighting::Cro;
    case ObjectKind::SetPartition:
      return weighting == Weighting::BlocksCro || weighting == Weighting::BlocksCroStar;
    case ObjectKind::Permutation: return weighting == Weighting::WexCro;
  }
  return false;
}

}  // namespace

MPoly brute_gf(ObjectKind kind, int n, Weighting weighting, unsigned jobs) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "brute_gf: negative size");
  if (!compatible(kind, weighting)) throw Error(ErrorCode::InvalidArgument, "brute_gf: weighting does not fit object kind");
  if (jobs == 0) jobs = 1;

  // Loose upper bounds on the statistics keep the tally dense.
  const int ground = kind == ObjectKind::Matching ? 2 * n : n;
  const int max_q = ground * ground;
  const int max_y = kind == ObjectKind::Matching ? 0 : n;

  std::vector<Tally> tallies(jobs, Tally(max_y, max_q));
  if (jobs == 1) {
    sweep(kind, n, weighting, Shard{0, 1}, tallies[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned s = 0; s < jobs; ++s)
      workers.emplace_back([&, s] { sweep(kind, n, weighting, Shard{s, jobs}, tallies[s]); });
    for (auto& w : workers) w.join();
  }

  MPoly out;
  for (int ye = 0; ye <= max_y; ++ye) {
    for (int qe = 0; qe <= max_q; ++qe) {
      std::uint64_t total = 0;
      for (const auto& t : tallies) total += t.counts[static_cast<std::size_t>(ye * t.stride + qe)];
      if (total == 0) continue;
      Exponents e{};
      e[static_cast<std::size_t>(Var::y)] = static_cast<std::uint32_t>(ye);
      e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(qe);
      BigInt c;
      mpz_import(c.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
      out.add_term(e, c);
    }
  }
  return out;
}

}  // namespace qcross
