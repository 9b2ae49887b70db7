#include "moduli/algebra/special.hpp"

#include "moduli/errors.hpp"

#include <mutex>
#include <vector>

namespace moduli {

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational binomial(const Rational& n, long k) {
  if (k < 0) return 0;
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= (n - i);
  return acc / Rational(factorial(static_cast<unsigned>(k)));
}

namespace {

// B_0..B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_table(int upto) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= upto) {
    const unsigned m = table.size();
    Rational s(0);
    for (unsigned j = 0; j < m; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
      s += Rational(c) * table[j];
    }
    table.push_back(-s / Rational(m + 1));
  }
  return {table.begin(), table.begin() + upto + 1};
}

}  // namespace

Rational bernoulli(int m) {
  if (m < 2 || m % 2 != 0) throw RefusalError("bernoulli(m) needs even m >= 2, got " + std::to_string(m));
  return bernoulli_table(m)[m];
}

Rational zeta_negative(int g) {
  if (g < 1) throw RefusalError("zeta(1-2g) needs g >= 1");
  return -bernoulli(2 * g) / (2 * g);
}

}  // namespace moduli
