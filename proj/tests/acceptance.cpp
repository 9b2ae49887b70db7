// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include "moduli/algebra/interpolate.hpp"
#include "moduli/errors.hpp"
#include "moduli/fatgraph/enumerate.hpp"
#include "moduli/invariants/invariants.hpp"
#include "moduli/kernels/kernels.hpp"
#include "moduli/polytope/polytope.hpp"
#include "moduli/recursion/numeric.hpp"
#include "moduli/recursion/symbolic.hpp"
#include "moduli/recursion/verify.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

using namespace moduli;

namespace {

using B = std::vector<std::int64_t>;

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class C>
  void equal(const A& got, const C& want, const std::string& what) {
    if (!(got == want)) failures.push_back(what);
  }
};

FamilyStore& store() {
  static FamilyStore s;
  return s;
}

std::string str(const B& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

std::string gn(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

const std::vector<std::pair<int, int>> kTable1{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}};

SquarePolynomial table1_even(int g, int n) {
  if (g == 0 && n == 3) return oracle::n03();
  if (g == 1 && n == 1) return oracle::n11();
  if (g == 0 && n == 4) return oracle::n04();
  if (g == 1 && n == 2) return oracle::n12();
  return oracle::n21();
}

void table1(Check& c) {
  for (auto [g, n] : kTable1) {
    c.equal(build_polynomial(g, n).classes[0], table1_even(g, n), "build_polynomial " + gn(g, n));
    c.equal(store().get(g, n).classes[0], table1_even(g, n), "symbolic_step " + gn(g, n));
  }
}

void odd_classes(Check& c) {
  for (bool numeric : {true, false}) {
    const std::string tag = numeric ? "build_polynomial " : "symbolic_step ";
    const auto n04 = numeric ? build_polynomial(0, 4) : store().get(0, 4);
    const auto n12 = numeric ? build_polynomial(1, 2) : store().get(1, 2);
    c.equal(n04.classes[2], oracle::n04_two_odd(), tag + "(0,4) two odd");
    c.equal(n04.classes[4], n04.classes[0], tag + "(0,4) all odd vs all even");
    c.equal(n04.classes[4], oracle::n04(), tag + "(0,4) all odd");
    c.equal(n12.classes[2], oracle::n12_both_odd(), tag + "(1,2) both odd");
  }
}

void n31(Check& c) {
  const auto numeric = build_polynomial(3, 1);
  c.equal(numeric.classes[0], oracle::n31(), "build_polynomial (3,1)");
  c.equal(store().get(3, 1).classes[0], oracle::n31(), "symbolic_step (3,1)");
  const std::vector<Rational> want{
      make_rational(5005, 3),  make_rational(25025, 2), Rational(41118),        make_rational(929929, 12),
      make_rational(183955, 2), make_rational(283767, 4), make_rational(317735, 9), Rational(10813),
      make_rational(25443, 14), make_rational(495, 4)};
  const auto expansion = binomial_basis_n1(numeric);
  for (int k = 15; k >= 6; --k)
    c.equal(expansion.coefficients.at(k), want[15 - k], "c_" + std::to_string(k) + "^(3)");
  c.equal(expansion.coefficients.size(), std::size_t{10}, "ten census coefficients for g = 3");
}

void oracle_equivalence(Check& c) {
  for (auto [g, n] : kTable1) {
    const auto family = build_polynomial(g, n);
    for (const auto& b : oracle::admissible(n, 14)) {
      const Rational direct = direct_count(g, n, b);
      const Rational rec = eval_recursive(g, n, b);
      const Rational poly = family.evaluate(b);
      c.expect(direct == rec && rec == poly, gn(g, n) + " at " + str(b));
      c.equal(rec, oracle::table1(g, n, b), gn(g, n) + " vs Table 1 at " + str(b));
    }
  }
}

void euler(Check& c) {
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (!is_stable(g, n)) continue;
      const Rational closed = euler_closed(g, n);
      c.equal(euler_from_polynomial(store().get(g, n)), closed, "polynomial chi " + gn(g, n));
      c.equal(closed, oracle::penner(g, n), "closed chi " + gn(g, n));
    }
  c.equal(euler_from_polynomial(store().get(1, 1)), make_rational(-1, 12), "chi(M_{1,1})");
  c.equal(euler_from_polynomial(store().get(0, 4)), Rational(-1), "chi(M_{0,4})");
  c.equal(euler_from_polynomial(store().get(1, 2)), make_rational(1, 12), "chi(M_{1,2})");
  c.equal(euler_from_polynomial(store().get(2, 1)), make_rational(1, 120), "chi(M_{2,1})");
  for (auto [g, n] : kTable1) c.equal(euler_from_fatgraphs(g, n), euler_closed(g, n), "fatgraph chi " + gn(g, n));
}

void intersections(Check& c) {
  auto at = [](int g, int n, std::vector<unsigned> d) {
    return intersection_numbers(store().get(g, n)).values.at(d);
  };
  c.equal(at(0, 3, {0, 0, 0}), Rational(1), "<tau_0^3>");
  c.equal(at(1, 1, {1}), make_rational(1, 24), "<tau_1>_1");
  c.equal(at(0, 4, {1, 0, 0, 0}), Rational(1), "<tau_1 tau_0^3>");
  c.equal(at(1, 2, {2, 0}), make_rational(1, 24), "<tau_2 tau_0>_1");
  c.equal(at(1, 2, {1, 1}), make_rational(1, 24), "<tau_1^2>_1");
  c.equal(at(2, 1, {4}), make_rational(1, 1152), "<tau_4>_2");
}

void census(Check& c) {
  c.equal(enumerate(0, 3).size(), std::size_t{7}, "Fat_{0,3} has 7 labeled classes");
  const auto w11 = census_by_edges(1, 1);
  c.expect(w11.size() == 2 && w11.at(3) == make_rational(1, 6) && w11.at(2) == make_rational(1, 4),
           "(1,1) weights {1/6, 1/4}");
  const auto w21 = census_by_edges(2, 1);
  const std::vector<Rational> want{make_rational(35, 6), make_rational(105, 4), make_rational(93, 2),
                                   make_rational(161, 4), make_rational(84, 5), make_rational(21, 8)};
  c.equal(w21.size(), std::size_t{6}, "(2,1) edge counts 4..9");
  for (int k = 9; k >= 4; --k)
    c.expect(w21.contains(k) && w21.at(k) == want[9 - k], "(2,1) weighted count with " + std::to_string(k) + " edges");
  for (int g = 1; g <= 3; ++g) {
    const auto e = binomial_basis_n1(store().get(g, 1));
    c.equal(e.coefficients.at(6 * g - 3), census_top(g), "c_{6g-3} closed form, g = " + std::to_string(g));
    c.equal(e.coefficients.at(2 * g), census_bottom(g), "c_{2g} closed form, g = " + std::to_string(g));
  }
  c.equal(census_top(1), make_rational(1, 6), "closed form c_3^(1)");
  c.equal(census_bottom(2), make_rational(21, 8), "closed form c_4^(2)");
  c.equal(census_top(3), make_rational(5005, 3), "closed form c_15^(3)");
  c.equal(census_bottom(3), make_rational(495, 4), "closed form c_6^(3)");
}

int code(Parity p) { return p == Parity::Even ? 0 : p == Parity::Odd ? 1 : 2; }

void kernels(Check& c) {
  const ParityKernel& s0 = kernel(pair_kernel_key(0));
  for (long k = 1; k <= 30; ++k) {
    const Rational want = k % 2 == 0 ? Rational(4 * oracle::binom(make_rational(k, 2) + 1, 3)) : Rational(oracle::binom(Rational(k + 1), 3) / 2);
    c.equal(s0.branch(k).evaluate(k), want, "S_0 closed form at k = " + std::to_string(k));
  }
  std::vector<KernelKey> keys;
  const Parity fixed[] = {Parity::Even, Parity::Odd};
  for (unsigned m = 0; m <= 4; ++m) {
    keys.push_back(pair_kernel_key(m));
    for (unsigned m2 = 0; m + m2 <= 4; ++m2) {
      keys.push_back(triple_kernel_key(m, m2));
      for (Parity pp : fixed)
        for (Parity pq : fixed) keys.push_back(triple_kernel_key(m, m2, pp, pq));
    }
  }
  for (const auto& key : keys) {
    const ParityKernel& k = kernel(key);
    std::ostringstream name;
    name << "kernel arity " << key.arity << " exponents";
    for (auto e : key.exponents) name << " " << e;
    c.expect(k.even_branch.is_odd() && k.odd_branch.is_odd(), name.str() + " odd");
    for (long v = 1; v <= 30; ++v) {
      const Rational brute = key.arity == 2
                                 ? oracle::pair_sum(key.exponents[0], code(key.parities[0]), code(key.parities[1]), v)
                                 : oracle::triple_sum(key.exponents[0], key.exponents[1], code(key.parities[0]),
                                                      code(key.parities[1]), code(key.parities[2]), v);
      c.equal(kernel_eval(k, v), brute, name.str() + " at k = " + std::to_string(v));
    }
  }
  const SimplexSpec polytopes[] = {{{1, 2}, 2, {0, 0}}, {{1, 1}, 1, {0, 0}}};
  for (const auto& p : polytopes)
    for (unsigned a = 0; a <= 5; ++a)
      for (unsigned b = 0; a + b <= 5; ++b) {
        const SimplexSpec s{p.constraint, p.bound, {a, b}};
        std::vector<Node> nodes;
        for (long k = 0; k <= static_cast<long>(a + b + 2); ++k) nodes.emplace_back(k, weighted_simplex_count(s, k, false));
        const UniPolynomial closed = interpolate_univariate(nodes);
        const Rational sign = (a + b) % 2 == 0 ? 1 : -1;
        for (long k = 1; k <= 10; ++k)
          c.equal(weighted_simplex_count(s, k, true), sign * closed.evaluate(Rational(-k)), "reciprocity");
      }
}

void properties(Check& c) {
  const std::vector<std::pair<int, int>> types{{0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  for (auto [g, n] : types) {
    const auto& f = store().get(g, n);
    // parity vanishing and symmetry
    for (const auto& b0 : oracle::admissible(n, 12)) {
      B b = b0;
      b[0] += 1;
      c.equal(eval_recursive(g, n, b), Rational(0), "odd total " + gn(g, n) + str(b));
      b = b0;
      const Rational v = eval_recursive(g, n, b);
      std::reverse(b.begin(), b.end());
      c.equal(eval_recursive(g, n, b), v, "symmetry " + gn(g, n) + str(b0));
      std::rotate(b.begin(), b.begin() + 1, b.end());
      c.equal(eval_recursive(g, n, b), v, "symmetry " + gn(g, n) + str(b0));
    }
    // vanishing on even-class inputs below the corrected bound
    for (const auto& b : oracle::admissible(n, 4 * g + 2 * n - 3)) {
      bool all_even = std::all_of(b.begin(), b.end(), [](auto v) { return v % 2 == 0; });
      if (all_even) c.equal(eval_recursive(g, n, b), Rational(0), "vanishing " + gn(g, n) + str(b));
    }
    c.expect(check_vanishing(f).ok(), "check_vanishing " + gn(g, n));
    // top degree independent of parity, class count
    const auto top = f.classes[0].homogeneous_part(f.degree());
    std::vector<SquarePolynomial> distinct;
    for (int k = 0; k <= n; ++k) {
      if (k % 2 == 0) c.equal(f.classes[k].homogeneous_part(f.degree()), top, "top degree " + gn(g, n));
      else c.expect(f.classes[k].is_zero(), "odd class zero " + gn(g, n));
      if (std::find(distinct.begin(), distinct.end(), f.classes[k]) == distinct.end()) distinct.push_back(f.classes[k]);
    }
    c.expect(static_cast<int>(distinct.size()) <= n / 2 + 2, "class count " + gn(g, n));
    // symbolic and numeric identity
    c.equal(f, build_polynomial(g, n), "symbolic = numeric " + gn(g, n));
    // delta cancellation and divisibility
    for (int k = 0; k <= n; k += 2) {
      std::vector<bool> odd(n, false);
      for (int i = 0; i < k; ++i) odd[i] = true;
      SquarePolynomial sum(n);
      for (int d = 0; d < n; ++d) {
        const auto rhs = rec1_rhs(g, n, odd, d, store());
        for (const auto& [e, coef] : rhs.terms()) c.expect(e[d] % 2 == 1, "b_d divides rec1 " + gn(g, n));
        sum += rhs;
      }
      c.equal(sum, rec2_rhs(g, n, odd, store()), "delta cancellation " + gn(g, n));
    }
    for (int d = 1; d < n; ++d)
      c.equal(symbolic_step(g, n, store(), d), f, "distinguished variable " + std::to_string(d) + " " + gn(g, n));
    c.expect(verify_recursion(store(), g, n, sample_points(n, 10, 1)).ok(), "recursion samples " + gn(g, n));
  }
}

void worked_example(Check& c) {
  const ParityKernel& s0 = kernel(pair_kernel_key(0));
  const std::vector<B> points{{2, 2, 2, 2}, {2, 4, 6, 8}, {1, 3, 5, 7}, {4, 4, 2, 6}, {1, 1, 2, 2},
                              {1, 3, 2, 4}, {5, 7, 6, 2}, {3, 1, 8, 10}};
  for (const auto& b : points) {
    const std::int64_t total = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    Rational rhs(0), printed(0);
    const bool two_odd = b[0] % 2 == 1 && b[1] % 2 == 1 && b[2] % 2 == 0 && b[3] % 2 == 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const long k = b[i] + b[j];
        rhs += kernel_eval(s0, k);
        const bool even_pair = !two_odd || (i == 0 && j == 1) || (i == 2 && j == 3);
        printed += even_pair ? Rational(4 * oracle::binom(make_rational(k, 2) + 1, 3)) : Rational(oracle::binom(Rational(k + 1), 3) / 2);
      }
    const Rational lhs = Rational(total) * eval_recursive(0, 4, b);
    c.equal(rhs, lhs, "S-kernel side at " + str(b));
    c.equal(printed, lhs, "printed binomial side at " + str(b));
    c.equal(Rational(total) * store().get(0, 4).evaluate(b), lhs, "family side at " + str(b));
    std::vector<Rational> x;
    for (auto v : b) x.emplace_back(v * v);
    c.equal(lhs, Rational(total) * (two_odd ? oracle::n04_two_odd() : oracle::n04()).evaluate(x),
            "closed form at " + str(b));
  }
}

void observations() {
  std::cout << "  note: literal vanishing bound sum b < 4g+2n, nonzero values found:";
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
    for (const auto& [b, v] : check_vanishing(store().get(g, n)).literal_counterexamples)
      std::cout << " N_" << gn(g, n) << str(b) << "=" << to_string(v);
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Table 1 reproduction (numeric and symbolic)", table1},
      {"odd-class formulas", odd_classes},
      {"N_{3,1} product formula and census", n31},
      {"direct = recursive = polynomial for sum b <= 14", oracle_equivalence},
      {"Euler characteristics", euler},
      {"intersection numbers", intersections},
      {"fatgraph census", census},
      {"kernel suite and reciprocity", kernels},
      {"property suite", properties},
      {"N_{0,4} worked recursion example", worked_example},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << static_cast<int>(secs * 10) / 10.0 << "s)\n";
    for (std::size_t f = 0; f < std::min<std::size_t>(c.failures.size(), 10); ++f)
      std::cout << "    " << c.failures[f] << "\n";
    if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
  }
  observations();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
