#pragma once

#include "intertwine/classifier.hpp"

#include <json.hpp>

namespace intertwine {

/// {"s_im", "s_re", "tag", "text"}; rationals as "a/b".
nlohmann::json to_json(const CharFx& chi);

/// {"i","j","k"} and friends; Radon adds "case", ComplexCapelli adds "variant".
nlohmann::json params_json(const Certificate& c);

/// {"dim", "family", "params", "twist", "reference"} plus "reason" when dim = 0.
nlohmann::json to_json(const Classification& c);

/// {"blocks": ["p:expr", ...], "field"}.
nlohmann::json to_json(const Quadruple& x);

}  // namespace intertwine
