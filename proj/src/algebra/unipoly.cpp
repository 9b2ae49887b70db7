#include "moduli/algebra/unipoly.hpp"

#include <algorithm>

namespace moduli {

UniPolynomial::UniPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPolynomial::coefficient(int k) const {
  return (k < 0 || k > degree()) ? Rational(0) : coeffs_[k];
}

Rational UniPolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool UniPolynomial::is_odd() const {
  for (std::size_t k = 0; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

bool UniPolynomial::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolynomial(std::move(out));
}

}  // namespace moduli
