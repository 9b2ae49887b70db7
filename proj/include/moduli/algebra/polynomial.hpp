#pragma once

#include "moduli/algebra/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace moduli {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial over the rationals.
///
/// In lattice-count families variable i stands for b_i^2; the symbolic
/// recursion also uses the same container for polynomials in the b_i
/// themselves before halving exponents. No zero coefficient is ever stored.
class SquarePolynomial {
public:
  using TermMap = std::map<Exponent, Rational>;

  explicit SquarePolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static SquarePolynomial constant(std::size_t nvars, const Rational& c);
  static SquarePolynomial variable(std::size_t nvars, std::size_t index);
  static SquarePolynomial monomial(Exponent exp, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Largest exponent of one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;

  Rational coefficient(const Exponent& exp) const;
  void add_term(const Exponent& exp, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  SquarePolynomial homogeneous_part(int degree) const;

  /// Variable i of *this becomes variable target[i] of a polynomial in
  /// `nvars_out` variables.
  SquarePolynomial remap(std::span<const std::size_t> target, std::size_t nvars_out) const;

  /// Coefficients of var^k, k ascending, as polynomials in the same
  /// variables (var's exponent zeroed).
  std::vector<SquarePolynomial> split_by(std::size_t var) const;

  SquarePolynomial& operator+=(const SquarePolynomial& rhs);
  SquarePolynomial& operator-=(const SquarePolynomial& rhs);
  SquarePolynomial& operator*=(const Rational& c);
  /// this += c * rhs, the accumulation every recursion step reduces to.
  void add_scaled(const SquarePolynomial& rhs, const Rational& c);

  friend SquarePolynomial operator+(SquarePolynomial a, const SquarePolynomial& b) { return a += b; }
  friend SquarePolynomial operator-(SquarePolynomial a, const SquarePolynomial& b) { return a -= b; }
  friend SquarePolynomial operator*(SquarePolynomial a, const Rational& c) { return a *= c; }
  friend SquarePolynomial operator*(const Rational& c, SquarePolynomial a) { return a *= c; }
  friend SquarePolynomial operator*(const SquarePolynomial& a, const SquarePolynomial& b);

  friend bool operator==(const SquarePolynomial& a, const SquarePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void check_arity(const SquarePolynomial& rhs) const;

  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace moduli
