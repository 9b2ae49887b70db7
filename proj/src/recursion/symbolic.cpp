#include "moduli/recursion/symbolic.hpp"

#include "moduli/algebra/special.hpp"
#include "moduli/errors.hpp"
#include "moduli/kernels/kernels.hpp"

#include <bit>

namespace moduli {

LatticeCountPolynomial base_family(int g, int n) {
  LatticeCountPolynomial f{g, n, std::vector<SquarePolynomial>(n + 1, SquarePolynomial(n))};
  if (g == 0 && n == 3) {
    f.classes[0] = SquarePolynomial::constant(3, 1);
    f.classes[2] = SquarePolynomial::constant(3, 1);
  } else if (g == 1 && n == 1) {
    f.classes[0] = SquarePolynomial::variable(1, 0) * make_rational(1, 48) -
                   SquarePolynomial::constant(1, make_rational(1, 12));
  } else {
    throw RefusalError("base families exist only for (0,3) and (1,1)");
  }
  return f;
}

SquarePolynomial to_linear_variables(const SquarePolynomial& square) {
  SquarePolynomial out(square.nvars());
  for (const auto& [exp, c] : square.terms()) {
    Exponent e = exp;
    for (auto& v : e) v *= 2;
    out.add_term(e, c);
  }
  return out;
}

namespace {

// Lower polynomial in x-variables over `args` (positions into the target's
// n variables), lifted to b-variables of the target with the leading `lead`
// slots (the summation variables) stripped off and returned by power.
//
// For lead = 1: result[m] is the coefficient of p^{2m}.
// For lead = 2: result[m][m'] of p^{2m} q^{2m'}.
std::vector<SquarePolynomial> lift_by_first(const SquarePolynomial& lower, std::span<const std::size_t> rest_targets,
                                            std::size_t n) {
  std::vector<std::size_t> target(lower.nvars());
  target[0] = 0;  // stripped below
  for (std::size_t i = 0; i < rest_targets.size(); ++i) target[i + 1] = rest_targets[i];
  std::vector<SquarePolynomial> out;
  for (const auto& part : lower.split_by(0)) out.push_back(to_linear_variables(part.remap(target, n)));
  return out;
}

std::vector<std::vector<SquarePolynomial>> lift_by_first_two(const SquarePolynomial& lower,
                                                             std::span<const std::size_t> rest_targets,
                                                             std::size_t n) {
  std::vector<std::size_t> target(lower.nvars());
  target[0] = 0;
  target[1] = 0;
  for (std::size_t i = 0; i < rest_targets.size(); ++i) target[i + 2] = rest_targets[i];
  std::vector<std::vector<SquarePolynomial>> out;
  for (const auto& by_p : lower.split_by(0)) {
    out.emplace_back();
    for (const auto& by_q : by_p.split_by(1)) out.back().push_back(to_linear_variables(by_q.remap(target, n)));
  }
  return out;
}

// u(b_i + sign * b_j) as a polynomial in the n b-variables.
SquarePolynomial compose_linear(const UniPolynomial& u, std::size_t n, std::size_t i, std::size_t j, int sign) {
  SquarePolynomial out(n);
  Exponent e(n, 0);
  for (int t = 0; t <= u.degree(); ++t) {
    const Rational& c = u.coefficients()[t];
    if (c == 0) continue;
    for (int l = 0; l <= t; ++l) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), t, l);
      Rational coef = c * Rational(binom);
      if (sign < 0 && l % 2 == 1) coef = -coef;
      std::fill(e.begin(), e.end(), 0u);
      e[i] = t - l;
      e[j] += l;
      out.add_term(e, coef);
    }
  }
  return out;
}

SquarePolynomial univariate_in(const UniPolynomial& u, std::size_t n, std::size_t var) {
  SquarePolynomial out(n);
  Exponent e(n, 0);
  for (int t = 0; t <= u.degree(); ++t) {
    e[var] = t;
    out.add_term(e, u.coefficients()[t]);
  }
  return out;
}

std::vector<bool> parity_args(bool lead, const std::vector<bool>& odd, std::span<const std::size_t> positions) {
  std::vector<bool> out{lead};
  for (auto p : positions) out.push_back(odd[p]);
  return out;
}

std::vector<bool> parity_args(bool lead1, bool lead2, const std::vector<bool>& odd, std::span<const std::size_t> positions) {
  std::vector<bool> out{lead1, lead2};
  for (auto p : positions) out.push_back(odd[p]);
  return out;
}

SquarePolynomial class_poly(FamilyStore& store, int g, int n, const std::vector<bool>& odd) {
  return store.get(g, n).polynomial_for(odd);
}

Parity parity_of(bool odd) { return odd ? Parity::Odd : Parity::Even; }

// sum_{p+q=b_i+sign*b_j, q even} p q N_{g,n-1}(p, b without i, j), one
// kernel per power of p.
SquarePolynomial pair_term(int g, int n, const std::vector<bool>& odd, int i, int j, int sign, FamilyStore& store) {
  SquarePolynomial out(n);
  if (!is_stable(g, n - 1)) return out;
  std::vector<std::size_t> rest;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) rest.push_back(k);
  const bool p_odd = odd[i] != odd[j];
  const auto lower = class_poly(store, g, n - 1, parity_args(p_odd, odd, rest));
  const auto parts = lift_by_first(lower, rest, n);
  for (std::size_t m = 0; m < parts.size(); ++m) {
    if (parts[m].is_zero()) continue;
    const auto& ker = kernel(pair_kernel_key(static_cast<unsigned>(m)));
    const UniPolynomial& branch = p_odd ? ker.odd_branch : ker.even_branch;
    out += compose_linear(branch, n, i, j, sign) * parts[m];
  }
  return out;
}

// 1/2 sum_{p+q+r=b_i} p q r [N_{g-1,n+1}(p,q,rest) + splittings].
SquarePolynomial bracket_term(int g, int n, const std::vector<bool>& odd, int i, FamilyStore& store) {
  SquarePolynomial out(n);
  std::vector<std::size_t> rest;
  for (int k = 0; k < n; ++k)
    if (k != i) rest.push_back(k);
  const bool r_branch_odd = odd[i];

  // coeffs[m][m2] multiplies p^{2m+1} q^{2m2+1} r in the summand
  auto add_kernel_sums = [&](bool p_odd, bool q_odd, const std::vector<std::vector<SquarePolynomial>>& coeffs) {
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      for (std::size_t m2 = 0; m2 < coeffs[m].size(); ++m2) {
        if (coeffs[m][m2].is_zero()) continue;
        const auto& ker = kernel(triple_kernel_key(static_cast<unsigned>(m), static_cast<unsigned>(m2),
                                                   parity_of(p_odd), parity_of(q_odd)));
        const UniPolynomial& branch = r_branch_odd ? ker.odd_branch : ker.even_branch;
        out.add_scaled(univariate_in(branch, n, i) * coeffs[m][m2], make_rational(1, 2));
      }
  };

  if (is_stable(g - 1, n + 1)) {
    for (bool p_odd : {false, true}) {
      const bool q_odd = p_odd != odd[i];
      const auto lower = class_poly(store, g - 1, n + 1, parity_args(p_odd, q_odd, odd, rest));
      const auto parts = lift_by_first_two(lower, rest, n);
      add_kernel_sums(p_odd, q_odd, parts);
    }
  }

  const int m = n - 1;
  for (int g1 = 0; g1 <= g; ++g1)
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const int n1 = std::popcount(mask) + 1, n2 = m - n1 + 2;
      if (!is_stable(g1, n1) || !is_stable(g - g1, n2)) continue;
      std::vector<std::size_t> left, right;
      bool p_odd = false, q_odd = false;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1u) {
          left.push_back(rest[k]);
          p_odd ^= odd[rest[k]];
        } else {
          right.push_back(rest[k]);
          q_odd ^= odd[rest[k]];
        }
      }
      const auto lp = lift_by_first(class_poly(store, g1, n1, parity_args(p_odd, odd, left)), left, n);
      const auto lq = lift_by_first(class_poly(store, g - g1, n2, parity_args(q_odd, odd, right)), right, n);
      std::vector<std::vector<SquarePolynomial>> products(lp.size());
      for (std::size_t a = 0; a < lp.size(); ++a)
        for (const auto& right_part : lq) products[a].push_back(lp[a] * right_part);
      add_kernel_sums(p_odd, q_odd, products);
    }
  return out;
}

std::vector<bool> canonical_parity(int n, int odd_count) {
  std::vector<bool> odd(n, false);
  for (int k = 0; k < odd_count; ++k) odd[k] = true;
  return odd;
}

}  // namespace

SquarePolynomial rec1_rhs(int g, int n, const std::vector<bool>& odd, int d, FamilyStore& store) {
  require_stable(g, n);
  if (d < 0 || d >= n) throw RefusalError("distinguished variable out of range");
  SquarePolynomial out(n);
  for (int j = 0; j < n; ++j) {
    if (j == d) continue;
    SquarePolynomial both = pair_term(g, n, odd, d, j, +1, store);
    both += pair_term(g, n, odd, d, j, -1, store);
    out.add_scaled(both, make_rational(1, 2));
  }
  out += bracket_term(g, n, odd, d, store);
  return out;
}

SquarePolynomial rec2_rhs(int g, int n, const std::vector<bool>& odd, FamilyStore& store) {
  require_stable(g, n);
  SquarePolynomial out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out += pair_term(g, n, odd, i, j, +1, store);
  for (int i = 0; i < n; ++i) out += bracket_term(g, n, odd, i, store);
  return out;
}

LatticeCountPolynomial symbolic_step(int g, int n, FamilyStore& store, int d) {
  require_stable(g, n);
  if ((g == 0 && n == 3) || (g == 1 && n == 1)) return base_family(g, n);
  LatticeCountPolynomial f{g, n, std::vector<SquarePolynomial>(n + 1, SquarePolynomial(n))};
  const std::string where = "symbolic_step(" + std::to_string(g) + "," + std::to_string(n) + ")";
  for (int k = 0; k <= n; k += 2) {
    const auto rhs = rec1_rhs(g, n, canonical_parity(n, k), d, store);
    SquarePolynomial cls(n);
    for (const auto& [exp, c] : rhs.terms()) {
      Exponent e = exp;
      if (e[d] % 2 == 0)
        throw ConsistencyError(where + ": right side is not divisible by b_" + std::to_string(d + 1) +
                               " into a polynomial in squares");
      e[d] -= 1;
      for (auto& v : e) {
        if (v % 2 != 0) throw ConsistencyError(where + ": odd exponent after division");
        v /= 2;
      }
      cls.add_term(e, c);
    }
    if (cls.total_degree() > f.degree()) throw ConsistencyError(where + ": degree exceeds 3g-3+n");
    f.classes[k] = std::move(cls);
  }
  return f;
}

}  // namespace moduli
