#include "moduli/algebra/serialize.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <sstream>

namespace moduli {

nlohmann::json to_json(const SquarePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exp, c] : p.terms()) terms.push_back({{"exp", exp}, {"coef", to_string(c)}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

SquarePolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    const auto nvars = j.at("nvars").get<std::size_t>();
    SquarePolynomial p(nvars);
    for (const auto& t : j.at("terms")) {
      auto exp = t.at("exp").get<Exponent>();
      if (exp.size() != nvars) throw RefusalError("polynomial JSON: exponent arity mismatch");
      const Rational c = parse_rational(t.at("coef").get<std::string>());
      if (c == 0) throw RefusalError("polynomial JSON: explicit zero coefficient");
      if (p.coefficient(exp) != 0) throw RefusalError("polynomial JSON: repeated exponent");
      p.add_term(exp, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw RefusalError(std::string("polynomial JSON: ") + e.what());
  }
}

std::string render(const SquarePolynomial& p) {
  if (p.is_zero()) return "0";
  // content = gcd(numerators) / lcm(denominators), sign of the leading term
  Integer g(0), l(1);
  for (const auto& [exp, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content = make_rational(g, l);
  // leading term = highest degree, then last in map order
  const auto* lead = &*p.terms().rbegin();
  int best = -1;
  for (const auto& t : p.terms()) {
    unsigned d = 0;
    for (unsigned e : t.first) d += e;
    if (static_cast<int>(d) >= best) {
      best = static_cast<int>(d);
      lead = &t;
    }
  }
  if (lead->second < 0) content = -content;

  // Print in descending total degree, ties by descending exponent vector.
  std::vector<const std::pair<const Exponent, Rational>*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a->first) da += e;
    for (unsigned e : b->first) db += e;
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream body;
  bool first = true;
  for (const auto* t : order) {
    const Rational scaled = t->second / content;  // an integer by construction
    Integer mag = abs(scaled.get_num());
    if (first) {
      if (scaled < 0) body << "-";
    } else {
      body << (scaled < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t v = 0; v < t->first.size(); ++v) {
      if (t->first[v] == 0) continue;
      if (has_var) mono << "*";
      mono << "b" << (v + 1) << "^" << 2 * t->first[v];
      has_var = true;
    }
    if (!has_var) {
      body << mag.get_str();
    } else {
      if (mag != 1) body << mag.get_str() << "*";
      body << mono.str();
    }
  }
  const std::string b = body.str();
  if (content == 1) return b;
  if (content == -1) return "-(" + b + ")";
  const bool single = p.size() == 1;
  std::string out;
  const Integer num = content.get_num();
  const Integer den = content.get_den();
  std::string head = single ? b : "(" + b + ")";
  if (num == 1) out = head;
  else if (num == -1) out = "-" + head;
  else out = num.get_str() + "*" + head;
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace moduli
