#include "moduli/invariants/invariants.hpp"

#include "moduli/algebra/serialize.hpp"
#include "moduli/algebra/special.hpp"
#include "moduli/errors.hpp"
#include "moduli/fatgraph/enumerate.hpp"

#include <functional>

namespace moduli {

namespace {

Rational sign(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational power_of_two(int e) {
  Rational r(1);
  if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
  else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
  return r;
}

}  // namespace

Rational euler_closed(int g, int n) {
  require_stable(g, n);
  if (g == 0) return sign(n - 1) * Rational(factorial(n - 3));
  return sign(n - 1) * make_rational(factorial(2 * g + n - 3), factorial(2 * g - 2)) * zeta_negative(g);
}

Rational euler_from_polynomial(const LatticeCountPolynomial& family) {
  std::vector<Rational> zero(family.n, Rational(0));
  return family.evaluate_class(0, zero);
}

Rational euler_from_fatgraphs(int g, int n) {
  Rational sum(0);
  for (const auto& e : enumerate(g, n)) sum += sign(edge_count(e.graph) - n) / Rational(e.automorphisms);
  return sum;
}

IntersectionTable intersection_numbers(const LatticeCountPolynomial& family) {
  const int g = family.g, n = family.n;
  IntersectionTable table{g, n, {}};
  const Rational scale = power_of_two(6 * g - 6 + 2 * n - g);
  const SquarePolynomial volume = volume_polynomial(family);
  for (const auto& [exp, coef] : volume.terms()) {
    Rational v = coef * scale;
    for (unsigned d : exp) v *= Rational(factorial(d));
    table.values.emplace(exp, v);
  }
  return table;
}

SquarePolynomial volume_polynomial(const LatticeCountPolynomial& family) {
  const int top = family.degree();
  std::optional<SquarePolynomial> volume;
  for (std::size_t k = 0; k < family.classes.size(); k += 2) {
    SquarePolynomial part = family.classes[k].homogeneous_part(top);
    if (part.is_zero()) continue;
    if (!volume) volume = std::move(part);
    else if (!(*volume == part))
      throw ConsistencyError("top-degree parts differ between parity classes");
  }
  if (!volume) throw ConsistencyError("family has no top-degree part");
  return *volume;
}

VanishingReport check_vanishing(const LatticeCountPolynomial& family) {
  const int g = family.g, n = family.n;
  VanishingReport report;
  report.bound = 4 * g + 2 * n - 2;
  report.literal_bound = 4 * g + 2 * n;
  std::vector<std::int64_t> b(n);
  std::function<void(int, std::int64_t)> walk = [&](int i, std::int64_t sum) {
    if (i == n) {
      if (sum % 2 != 0) return;
      const Rational v = family.evaluate(b);
      if (sum < report.bound) {
        ++report.checked;
        if (v != 0) report.violations.push_back(b);
      } else if (v != 0) {
        report.literal_counterexamples.emplace_back(b, v);
      }
      return;
    }
    for (std::int64_t v = 1; sum + v + (n - i - 1) < report.literal_bound; ++v) {
      b[i] = v;
      walk(i + 1, sum + v);
    }
  };
  walk(0, 0);
  return report;
}

BinomialBasisExpansion binomial_basis_n1(const LatticeCountPolynomial& family) {
  if (family.n != 1) throw RefusalError("binomial basis expansion needs n = 1");
  const int g = family.g;
  const int span = 2 * family.degree() + 2;
  // f(t) = N(b) at b = 2(t+1); c_{j+1} is the j-th forward difference at 0.
  std::vector<Rational> f;
  for (int t = 0; t <= span; ++t) {
    std::vector<Rational> b{Rational(2 * (t + 1))};
    f.push_back(family.evaluate_class(0, b));
  }
  BinomialBasisExpansion out{g, {}};
  for (int j = 0; j <= span; ++j) {
    const int k = j + 1;
    if (k >= 2 * g && k <= 6 * g - 3) out.coefficients.emplace(k, f[0]);
    else if (f[0] != 0)
      throw ConsistencyError("binomial basis coefficient c_" + std::to_string(k) + " is nonzero");
    for (std::size_t i = 0; i + 1 < f.size(); ++i) f[i] = f[i + 1] - f[i];
    f.pop_back();
  }
  return out;
}

Rational census_top(int g) {
  return Rational(2) * Rational(factorial(6 * g - 5)) /
         (pow(Rational(12), g) * Rational(factorial(g) * factorial(3 * g - 3)));
}

Rational census_bottom(int g) {
  return Rational(factorial(4 * g - 1)) / (pow(Rational(4), g) * Rational(factorial(2 * g + 1)));
}

std::map<int, Rational> census_by_edges(int g, int n) {
  std::map<int, Rational> out;
  for (const auto& e : enumerate(g, n)) out[edge_count(e.graph)] += Rational(1) / Rational(e.automorphisms);
  return out;
}

namespace {

nlohmann::json exponent_json(const std::vector<unsigned>& d) {
  nlohmann::json j = nlohmann::json::array();
  for (unsigned v : d) j.push_back(v);
  return j;
}

nlohmann::json vector_json(const std::vector<std::int64_t>& b) {
  nlohmann::json j = nlohmann::json::array();
  for (auto v : b) j.push_back(v);
  return j;
}

}  // namespace

nlohmann::json invariants_report(const LatticeCountPolynomial& family, const ReportOptions& options) {
  const int g = family.g, n = family.n;
  nlohmann::json j;
  j["g"] = g;
  j["n"] = n;
  nlohmann::json euler;
  euler["closed"] = to_string(euler_closed(g, n));
  euler["polynomial"] = to_string(euler_from_polynomial(family));
  if (options.fatgraphs) euler["fatgraphs"] = to_string(euler_from_fatgraphs(g, n));
  j["euler"] = euler;

  nlohmann::json table = nlohmann::json::array();
  for (const auto& [d, v] : intersection_numbers(family).values)
    table.push_back({{"d", exponent_json(d)}, {"value", to_string(v)}});
  j["intersections"] = table;
  j["volume"] = render(volume_polynomial(family));

  const VanishingReport vanishing = check_vanishing(family);
  nlohmann::json vj;
  vj["bound"] = vanishing.bound;
  vj["checked"] = vanishing.checked;
  vj["ok"] = vanishing.ok();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& b : vanishing.violations) violations.push_back(vector_json(b));
  vj["violations"] = violations;
  vj["literal_bound"] = vanishing.literal_bound;
  nlohmann::json literal = nlohmann::json::array();
  for (const auto& [b, v] : vanishing.literal_counterexamples)
    literal.push_back({{"b", vector_json(b)}, {"value", to_string(v)}});
  vj["literal_counterexamples"] = literal;
  j["vanishing"] = vj;

  if (n == 1) {
    nlohmann::json census = nlohmann::json::array();
    const auto expansion = binomial_basis_n1(family);
    for (auto it = expansion.coefficients.rbegin(); it != expansion.coefficients.rend(); ++it)
      census.push_back({{"k", it->first}, {"c", to_string(it->second)}});
    j["census"] = census;
    j["census_closed_forms"] = {{"top", to_string(census_top(g))}, {"bottom", to_string(census_bottom(g))}};
  }
  if (options.fatgraphs) {
    nlohmann::json by_edges = nlohmann::json::array();
    for (const auto& [e, w] : census_by_edges(g, n)) by_edges.push_back({{"edges", e}, {"weight", to_string(w)}});
    j["fatgraph_census"] = by_edges;
  }
  return j;
}

}  // namespace moduli
