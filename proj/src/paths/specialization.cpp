#include "paths/specialization.hpp"

#include "algebra/qnumbers.hpp"

namespace qcross {

Specialization specialization_of(Family f) {
  const MPoly y = MPoly::var(Var::y);
  const MPoly q = MPoly::var(Var::q);
  const MPoly y1q = y * (MPoly(1) - q);
  switch (f) {
    case Family::Hermite: return {0, 0, 1, 0};
    case Family::Charlier: return {0, -1, y1q, MPoly(1) + y1q};
    case Family::CharlierStar: return {-1, y1q, 0, 1};
    case Family::Laguerre: return {-1, -(y * q), y, MPoly(1) + y};
  }
  return {0, 0, 0, 0};
}

MPoly specialized_gf(Family f, int n) {
  const auto s = specialization_of(f);
  return gf_paths(WeightSystem::motzkin(s.a, s.b, s.c, s.d), s.path_length(f, n), 0);
}

bool check_specialization(Family f, int n, unsigned jobs) {
  const MPoly brute = brute_gf(object_kind(f), n, object_weighting(f), jobs);
  return specialized_gf(f, n) == one_minus_q_pow(static_cast<std::uint32_t>(n)) * brute;
}

}  // namespace qcross
