#pragma once

#include "moduli/algebra/rational.hpp"

#include <vector>

namespace moduli {

/// Dense univariate polynomial, coefficients in ascending degree. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPolynomial {
public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;

  bool is_odd() const;   // only odd-degree terms
  bool is_even() const;  // only even-degree terms

  UniPolynomial& operator+=(const UniPolynomial& rhs);
  UniPolynomial& operator*=(const Rational& c);
  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator*(UniPolynomial a, const Rational& c) { return a *= c; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace moduli
