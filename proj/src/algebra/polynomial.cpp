#include "moduli/algebra/polynomial.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <numeric>

namespace moduli {

SquarePolynomial SquarePolynomial::constant(std::size_t nvars, const Rational& c) {
  SquarePolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SquarePolynomial SquarePolynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw RefusalError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

SquarePolynomial SquarePolynomial::monomial(Exponent exp, const Rational& c) {
  SquarePolynomial p(exp.size());
  p.add_term(exp, c);
  return p;
}

int SquarePolynomial::total_degree() const {
  int best = -1;
  for (const auto& [exp, c] : terms_)
    best = std::max(best, static_cast<int>(std::accumulate(exp.begin(), exp.end(), 0u)));
  return best;
}

int SquarePolynomial::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [exp, c] : terms_) best = std::max(best, static_cast<int>(exp.at(var)));
  return best;
}

Rational SquarePolynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SquarePolynomial::add_term(const Exponent& exp, const Rational& c) {
  if (exp.size() != nvars_) throw RefusalError("exponent arity does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SquarePolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw RefusalError("evaluation point arity does not match polynomial");
  std::vector<std::vector<Rational>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const int d = std::max(degree_in(v), 0);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  Rational sum(0);
  Rational term;
  for (const auto& [exp, c] : terms_) {
    term = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (exp[v] != 0) term *= powers[v][exp[v]];
    sum += term;
  }
  return sum;
}

SquarePolynomial SquarePolynomial::homogeneous_part(int degree) const {
  SquarePolynomial out(nvars_);
  for (const auto& [exp, c] : terms_)
    if (static_cast<int>(std::accumulate(exp.begin(), exp.end(), 0u)) == degree)
      out.terms_.emplace(exp, c);
  return out;
}

SquarePolynomial SquarePolynomial::remap(std::span<const std::size_t> target,
                                         std::size_t nvars_out) const {
  if (target.size() != nvars_) throw RefusalError("remap table arity does not match polynomial");
  SquarePolynomial out(nvars_out);
  Exponent e(nvars_out);
  for (const auto& [exp, c] : terms_) {
    std::fill(e.begin(), e.end(), 0u);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (exp[v] == 0) continue;
      if (target[v] >= nvars_out) throw RefusalError("remap target out of range");
      e[target[v]] += exp[v];
    }
    out.add_term(e, c);
  }
  return out;
}

std::vector<SquarePolynomial> SquarePolynomial::split_by(std::size_t var) const {
  std::vector<SquarePolynomial> parts(std::max(degree_in(var), -1) + 1, SquarePolynomial(nvars_));
  for (const auto& [exp, c] : terms_) {
    Exponent e = exp;
    const unsigned k = e[var];
    e[var] = 0;
    parts[k].terms_.emplace(std::move(e), c);
  }
  return parts;
}

void SquarePolynomial::check_arity(const SquarePolynomial& rhs) const {
  if (rhs.nvars_ != nvars_) throw RefusalError("polynomial arity mismatch");
}

SquarePolynomial& SquarePolynomial::operator+=(const SquarePolynomial& rhs) {
  check_arity(rhs);
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
  return *this;
}

SquarePolynomial& SquarePolynomial::operator-=(const SquarePolynomial& rhs) {
  check_arity(rhs);
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
  return *this;
}

SquarePolynomial& SquarePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coef] : terms_) coef *= c;
  return *this;
}

void SquarePolynomial::add_scaled(const SquarePolynomial& rhs, const Rational& c) {
  check_arity(rhs);
  if (c == 0) return;
  for (const auto& [exp, coef] : rhs.terms_) add_term(exp, coef * c);
}

SquarePolynomial operator*(const SquarePolynomial& a, const SquarePolynomial& b) {
  a.check_arity(b);
  SquarePolynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

}  // namespace moduli
