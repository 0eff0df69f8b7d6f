#include "algebra/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace qcross {

std::uint64_t total_degree(const Exponents& e) noexcept {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool MonomialOrder::operator()(const Exponents& lhs, const Exponents& rhs) const noexcept {
  const auto dl = total_degree(lhs);
  const auto dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  return rhs < lhs;
}

MPoly::MPoly(long value) : MPoly(BigInt(value)) {}

MPoly::MPoly(const BigInt& value) {
  if (value != 0) terms_.emplace(Exponents{}, value);
}

MPoly MPoly::monomial(const BigInt& coeff, const Exponents& exps) {
  MPoly p;
  if (coeff != 0) p.terms_.emplace(exps, coeff);
  return p;
}

MPoly MPoly::var(Var v, std::uint32_t power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(1, e);
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool MPoly::is_one() const noexcept {
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 && terms_.begin()->second == 1;
}

BigInt MPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MPoly::constant_term() const { return coeff(Exponents{}); }

std::uint32_t MPoly::degree_in(Var v) const noexcept {
  std::uint32_t deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(v)]);
  return deg;
}

MPoly MPoly::coeff_of(Var v, std::uint32_t power) const {
  const auto idx = static_cast<std::size_t>(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents reduced = e;
    reduced[idx] = 0;
    out.terms_.emplace(reduced, c);
  }
  return out;
}

void MPoly::add_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  BigInt prod;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = el[i] + er[i];
      mpz_mul(prod.get_mpz_t(), cl.get_mpz_t(), cr.get_mpz_t());
      out.add_term(e, prod);
    }
  }
  return out;
}

MPoly MPoly::pow(std::uint32_t exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MPoly> powers{MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[idx] = 0;
    out += monomial(c, rest) * powers[e[idx]];
  }
  return out;
}

MPoly MPoly::scale_var(Var v, const MPoly& factor) const {
  const auto idx = static_cast<std::size_t>(v);
  std::vector<MPoly> powers{MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * factor);
    out += monomial(c, e) * powers[e[idx]];
  }
  return out;
}

std::string render_monomial(const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigInt magnitude = abs(c);
    const std::string mono = render_monomial(e);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + '*' + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MPoly run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    MPoly out;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      bool saw_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        saw_sign = true;
        ++pos_;
        skip_space();
      }
      if (!first && !saw_sign) fail("expected '+' or '-'");
      first = false;
      out += parse_term() * MPoly(sign);
    }
    return out;
  }

private:
  MPoly parse_term() {
    BigInt coeff = 1;
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(read_digits());
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_var(peek())) fail("expected variable after '*'");
      }
    }
    Exponents e{};
    while (!at_end() && is_var(peek())) {
      const auto idx = var_index(peek());
      ++pos_;
      std::uint32_t power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        power = static_cast<std::uint32_t>(std::stoul(read_digits()));
      }
      e[idx] += power;
      any = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (!any) fail("expected a term");
    return MPoly::monomial(coeff, e);
  }

  static bool is_var(char ch) {
    return std::find(kVarNames.begin(), kVarNames.end(), ch) != kVarNames.end();
  }
  static std::size_t var_index(char ch) {
    return static_cast<std::size_t>(std::find(kVarNames.begin(), kVarNames.end(), ch) - kVarNames.begin());
  }

  std::string read_digits() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse,
                "cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

MPoly MPoly::parse(std::string_view text) { return PolyParser(text).run(); }

MPoly exact_div(const MPoly& p, const MPoly& r) {
  if (r.is_zero()) throw Error(ErrorCode::InvalidArgument, "exact_div: division by zero polynomial");
  if (r.is_one()) return p;

  const auto& [lead_exps, lead_coeff] = *r.terms().rbegin();
  MPoly quotient;
  MPoly::TermMap rem = p.terms();
  BigInt q_coeff;
  BigInt prod;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    if (!divides(lead_exps, top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lead_coeff.get_mpz_t())) {
      throw Error(ErrorCode::NotDivisible,
                  "exact_div: " + r.to_string() + " does not divide the dividend (stuck at term " +
                      top->second.get_str() + "*" + render_monomial(top->first) + ")");
    }
    Exponents shift;
    for (std::size_t i = 0; i < kNumVars; ++i) shift[i] = top->first[i] - lead_exps[i];
    mpz_divexact(q_coeff.get_mpz_t(), top->second.get_mpz_t(), lead_coeff.get_mpz_t());
    quotient.add_term(shift, q_coeff);
    for (const auto& [e, c] : r.terms()) {
      Exponents target;
      for (std::size_t i = 0; i < kNumVars; ++i) target[i] = e[i] + shift[i];
      mpz_mul(prod.get_mpz_t(), c.get_mpz_t(), q_coeff.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(target, -prod);
      if (!inserted) {
        it->second -= prod;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quotient;
}

}  // namespace qcross
