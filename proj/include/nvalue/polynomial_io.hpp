#pragma once

#include <string>

#include <json.hpp>

#include "nvalue/polynomial.hpp"

namespace nvalue {

/// {"vars":[...],"terms":[{"e":[...],"c":"<decimal>"}...]}, terms in
/// canonical (lex descending) order.
nlohmann::json to_json(const Polynomial& p);

/// Inverse of to_json. Throws ParseError on malformed input.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Human-readable form, e.g. "x^2 - 2 x y + y^2". The zero polynomial is "0".
std::string to_text(const Polynomial& p);

}  // namespace nvalue
