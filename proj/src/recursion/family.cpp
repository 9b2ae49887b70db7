#include "moduli/recursion/family.hpp"

#include "moduli/algebra/serialize.hpp"
#include "moduli/errors.hpp"

namespace moduli {

SquarePolynomial LatticeCountPolynomial::polynomial_for(const std::vector<bool>& odd) const {
  if (static_cast<int>(odd.size()) != n) throw RefusalError("parity vector length does not match n");
  int k = 0;
  for (bool o : odd) k += o;
  // class variable slot -> argument position
  std::vector<std::size_t> target(n);
  int next_odd = 0, next_even = k;
  for (int i = 0; i < n; ++i) target[odd[i] ? next_odd++ : next_even++] = i;
  return classes.at(k).remap(target, n);
}

Rational LatticeCountPolynomial::evaluate(std::span<const std::int64_t> b) const {
  if (static_cast<int>(b.size()) != n) throw RefusalError("expected " + std::to_string(n) + " boundary lengths");
  std::vector<Rational> x(n);
  int k = 0;
  for (auto v : b) {
    if (v <= 0) throw RefusalError("boundary lengths must be positive integers");
    k += v % 2;
  }
  int next_odd = 0, next_even = k;
  for (auto v : b) {
    const Rational sq = Rational(v) * Rational(v);
    x[v % 2 ? next_odd++ : next_even++] = sq;
  }
  return classes.at(k).evaluate(x);
}

Rational LatticeCountPolynomial::evaluate_class(int odd_count, std::span<const Rational> b) const {
  std::vector<Rational> x(b.begin(), b.end());
  for (auto& v : x) v *= v;
  return classes.at(odd_count).evaluate(x);
}

nlohmann::json to_json(const LatticeCountPolynomial& f) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t k = 0; k < f.classes.size(); ++k)
    classes.push_back({{"odd_count", k}, {"poly", to_json(f.classes[k])}});
  return {{"g", f.g}, {"n", f.n}, {"classes", std::move(classes)}};
}

LatticeCountPolynomial family_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.size() != 3) throw RefusalError("family JSON: expected keys g, n, classes");
    LatticeCountPolynomial f;
    f.g = j.at("g").get<int>();
    f.n = j.at("n").get<int>();
    require_stable(f.g, f.n);
    const auto& classes = j.at("classes");
    if (!classes.is_array() || static_cast<int>(classes.size()) != f.n + 1)
      throw RefusalError("family JSON: need one class per odd count 0..n");
    for (int k = 0; k <= f.n; ++k) {
      const auto& c = classes.at(k);
      if (c.at("odd_count").get<int>() != k) throw RefusalError("family JSON: classes out of order");
      auto p = polynomial_from_json(c.at("poly"));
      if (static_cast<int>(p.nvars()) != f.n) throw RefusalError("family JSON: class arity mismatch");
      if (p.total_degree() > f.degree()) throw RefusalError("family JSON: class exceeds degree 3g-3+n");
      if (k % 2 == 1 && !p.is_zero()) throw RefusalError("family JSON: odd class must be zero");
      f.classes.push_back(std::move(p));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw RefusalError(std::string("family JSON: ") + e.what());
  }
}

}  // namespace moduli
