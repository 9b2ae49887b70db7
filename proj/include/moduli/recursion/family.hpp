#pragma once

#include "moduli/algebra/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace moduli {

/// N_{g,n} as one polynomial in x_i = b_i^2 per parity class.
///
/// classes[k] is the polynomial used when exactly k arguments are odd, with
/// the odd arguments in variables 0..k-1 and the even ones after. Odd k
/// classes are zero.
struct LatticeCountPolynomial {
  int g = 0;
  int n = 0;
  std::vector<SquarePolynomial> classes;

  int degree() const { return 3 * g - 3 + n; }

  /// The class polynomial with variables in the given argument order
  /// (odd[i] says whether argument i is odd).
  SquarePolynomial polynomial_for(const std::vector<bool>& odd) const;

  /// N_{g,n}(b) for positive integers b.
  Rational evaluate(std::span<const std::int64_t> b) const;

  /// Evaluation of a class polynomial at arbitrary b (e.g. all zeros),
  /// i.e. polynomial extrapolation rather than a lattice count.
  Rational evaluate_class(int odd_count, std::span<const Rational> b) const;

  friend bool operator==(const LatticeCountPolynomial&, const LatticeCountPolynomial&) = default;
};

/// {"g":..,"n":..,"classes":[{"odd_count":k,"poly":{...}}, ...]}
nlohmann::json to_json(const LatticeCountPolynomial& family);
/// Strict reader: throws RefusalError on any schema deviation.
LatticeCountPolynomial family_from_json(const nlohmann::json& j);

}  // namespace moduli
