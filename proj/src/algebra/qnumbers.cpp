#include "algebra/qnumbers.hpp"

#include "error.hpp"

namespace qcross {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

MPoly q_pow(std::uint32_t e) { return MPoly::var(Var::q, e); }

MPoly q_int(std::int64_t n) {
  MPoly out;
  for (std::int64_t i = 0; i < n; ++i) out += q_pow(static_cast<std::uint32_t>(i));
  return out;
}

MPoly q_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return MPoly();
  return QBinomialTable(n)(n, k);
}

MPoly q_pochhammer(const MPoly& x, std::uint32_t n) {
  MPoly out(1);
  for (std::uint32_t i = 0; i < n; ++i) out *= MPoly(1) - x * q_pow(i);
  return out;
}

MPoly one_minus_q_pow(std::uint32_t n) { return (MPoly(1) - q_pow(1)).pow(n); }

QBinomialTable::QBinomialTable(std::int64_t max_n) {
  if (max_n < 0) throw Error(ErrorCode::InvalidArgument, "QBinomialTable: negative size");
  rows_.reserve(static_cast<std::size_t>(max_n + 1));
  rows_.push_back({MPoly(1)});
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<MPoly> row(static_cast<std::size_t>(n + 1));
    row[0] = MPoly(1);
    row[static_cast<std::size_t>(n)] = MPoly(1);
    for (std::int64_t k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] =
          prev[static_cast<std::size_t>(k - 1)] + q_pow(static_cast<std::uint32_t>(k)) * prev[static_cast<std::size_t>(k)];
    }
    rows_.push_back(std::move(row));
  }
}

const MPoly& QBinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n()) throw Error(ErrorCode::InvalidArgument, "QBinomialTable: n beyond table size");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace qcross
