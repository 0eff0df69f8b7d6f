#pragma once

#include <cstdint>
#include <vector>

#include "algebra/mpoly.hpp"

namespace qcross {

/// Integer binomial coefficient; zero whenever k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

MPoly q_pow(std::uint32_t e);
MPoly q_int(std::int64_t n);
MPoly q_binomial(std::int64_t n, std::int64_t k);
/// (x;q)_n = (1-x)(1-xq)...(1-xq^{n-1}).
MPoly q_pochhammer(const MPoly& x, std::uint32_t n);

/// (1-q)^n, cached per call site by the caller if needed.
MPoly one_minus_q_pow(std::uint32_t n);

/// Gaussian binomials for 0 <= k <= n <= max_n, built once by the Pascal
/// recurrence qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k).
class QBinomialTable {
public:
  explicit QBinomialTable(std::int64_t max_n);
  const MPoly& operator()(std::int64_t n, std::int64_t k) const;
  std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(rows_.size()) - 1; }

private:
  std::vector<std::vector<MPoly>> rows_;
  MPoly zero_;
};

}  // namespace qcross
