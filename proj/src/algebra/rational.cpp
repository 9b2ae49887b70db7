#include "moduli/algebra/rational.hpp"

#include "moduli/errors.hpp"

#include <cctype>

namespace moduli {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw RefusalError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw RefusalError("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw RefusalError("malformed rational: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

}  // namespace moduli
