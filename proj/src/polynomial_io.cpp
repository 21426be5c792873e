#include "nvalue/polynomial_io.hpp"

#include <sstream>

namespace nvalue {

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.get_str()}});
  return {{"vars", p.vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    Polynomial p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<ExponentVector>();
      if (e.size() != p.nvars()) throw ParseError("term exponent length does not match vars");
      Integer c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw ParseError("coefficient is not a decimal integer");
      p.accumulate(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << ' ';
      mono << p.vars()[i];
      if (e[i] > 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << mag.get_str() << ' ' << mono.str();
    }
  }
  return out.str();
}

}  // namespace nvalue
