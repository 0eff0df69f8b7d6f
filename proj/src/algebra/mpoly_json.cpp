#include "algebra/mpoly_json.hpp"

#include <algorithm>

#include "error.hpp"

namespace qcross {

nlohmann::json to_json(const MPoly& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    auto exps = nlohmann::json::object();
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] != 0) exps[std::string(1, kVarNames[i])] = e[i];
    terms.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

MPoly mpoly_from_json(const nlohmann::json& j) {
  try {
    MPoly out;
    for (const auto& term : j.at("terms")) {
      Exponents e{};
      for (const auto& [name, value] : term.at("exps").items()) {
        const auto it = std::find(kVarNames.begin(), kVarNames.end(), name.size() == 1 ? name[0] : '?');
        if (name.size() != 1 || it == kVarNames.end())
          throw Error(ErrorCode::Parse, "unknown variable '" + name + "' in polynomial JSON");
        const auto power = value.get<std::int64_t>();
        if (power < 0) throw Error(ErrorCode::Parse, "negative exponent in polynomial JSON");
        e[static_cast<std::size_t>(it - kVarNames.begin())] = static_cast<std::uint32_t>(power);
      }
      BigInt coeff;
      const auto& c = term.at("coeff");
      if (c.is_string()) {
        if (coeff.set_str(c.get<std::string>(), 10) != 0)
          throw Error(ErrorCode::Parse, "bad coefficient '" + c.get<std::string>() + "'");
      } else {
        coeff = BigInt(c.get<long>());
      }
      out.add_term(e, coeff);
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::Parse, std::string("malformed polynomial JSON: ") + ex.what());
  }
}

}  // namespace qcross
