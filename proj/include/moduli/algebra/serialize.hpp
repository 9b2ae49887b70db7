#pragma once

#include "moduli/algebra/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace moduli {

/// {"nvars": n, "terms": [{"exp": [...], "coef": "p/q"}, ...]}, terms in
/// ascending exponent order.
nlohmann::json to_json(const SquarePolynomial& p);
SquarePolynomial polynomial_from_json(const nlohmann::json& j);

/// Human rendering in b_i: content pulled out so the remaining polynomial
/// has coprime integer coefficients, e.g. "(b1^2 - 4)/48".
std::string render(const SquarePolynomial& p);

}  // namespace moduli
