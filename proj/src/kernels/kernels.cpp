#include "moduli/kernels/kernels.hpp"

#include "moduli/algebra/interpolate.hpp"
#include "moduli/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace moduli {

bool admits(Parity parity, long value) {
  switch (parity) {
    case Parity::Even: return value % 2 == 0;
    case Parity::Odd: return value % 2 != 0;
    case Parity::Free: return true;
  }
  return false;
}

std::string to_string(Parity parity) {
  switch (parity) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Free: return "free";
  }
  return "?";
}

namespace {

std::vector<Integer> power_table(unsigned exponent, long upto) {
  std::vector<Integer> table(upto + 1);
  for (long v = 0; v <= upto; ++v) mpz_ui_pow_ui(table[v].get_mpz_t(), static_cast<unsigned long>(v), exponent);
  return table;
}

Integer pair_sum(const std::vector<Integer>& pa, Parity pp, Parity pq, long k) {
  Integer sum(0);
  for (long p = 1; p < k; ++p) {
    const long q = k - p;
    if (admits(pp, p) && admits(pq, q)) sum += pa[p] * q;
  }
  return sum;
}

Integer triple_sum(const std::vector<Integer>& pa, const std::vector<Integer>& qb, Parity pp, Parity pq,
                   Parity pr, long k) {
  Integer sum(0), inner;
  for (long p = 1; p < k - 1; ++p) {
    if (!admits(pp, p)) continue;
    inner = 0;
    for (long q = 1; p + q < k; ++q) {
      const long r = k - p - q;
      if (admits(pq, q) && admits(pr, r)) inner += qb[q] * r;
    }
    sum += pa[p] * inner;
  }
  return sum;
}

void check_key(const KernelKey& key) {
  const std::size_t want = key.arity == 2 ? 1 : key.arity == 3 ? 2 : 0;
  if (want == 0) throw RefusalError("kernel arity must be 2 or 3");
  if (key.exponents.size() != want || key.parities.size() != want + 1)
    throw RefusalError("kernel key has the wrong number of exponents or parities");
  for (unsigned e : key.exponents)
    if (e % 2 == 0) throw RefusalError("kernel exponents must be odd and positive");
}

}  // namespace

Integer brute_pair_sum(unsigned a, Parity parity_p, Parity parity_q, long k) {
  if (k < 2) return 0;
  return pair_sum(power_table(a, k), parity_p, parity_q, k);
}

Integer brute_triple_sum(unsigned a, unsigned b, Parity parity_p, Parity parity_q, Parity parity_r, long k) {
  if (k < 3) return 0;
  return triple_sum(power_table(a, k), power_table(b, k), parity_p, parity_q, parity_r, k);
}

KernelKey pair_kernel_key(unsigned m) { return {2, {2 * m + 1}, {Parity::Free, Parity::Even}}; }

KernelKey triple_kernel_key(unsigned m, unsigned m2) {
  return {3, {2 * m + 1, 2 * m2 + 1}, {Parity::Free, Parity::Free, Parity::Even}};
}

KernelKey triple_kernel_key(unsigned m, unsigned m2, Parity parity_p, Parity parity_q) {
  return {3, {2 * m + 1, 2 * m2 + 1}, {parity_p, parity_q, Parity::Free}};
}

int ParityKernel::degree() const {
  return key.arity == 2 ? static_cast<int>(key.exponents[0]) + 2
                        : static_cast<int>(key.exponents[0] + key.exponents[1]) + 3;
}

Integer brute_kernel_sum(const KernelKey& key, long k) {
  check_key(key);
  if (key.arity == 2) return brute_pair_sum(key.exponents[0], key.parities[0], key.parities[1], k);
  return brute_triple_sum(key.exponents[0], key.exponents[1], key.parities[0], key.parities[1], key.parities[2], k);
}

ParityKernel build_kernel(const KernelKey& key) {
  check_key(key);
  ParityKernel out{key, {}, {}};
  const int degree = out.degree();
  const int fit = degree + 2;
  const int total = fit + 2;
  const long kmax = 2L * total;

  const auto pa = power_table(key.exponents[0], kmax);
  const auto qb = key.arity == 3 ? power_table(key.exponents[1], kmax) : std::vector<Integer>{};
  auto value = [&](long k) -> Integer {
    if (key.arity == 2) return pair_sum(pa, key.parities[0], key.parities[1], k);
    return triple_sum(pa, qb, key.parities[0], key.parities[1], key.parities[2], k);
  };

  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Node> nodes;
    std::vector<Node> checks;
    for (int i = 0; i < total; ++i) {
      const long k = 2L * i + (parity == 0 ? 2 : 1);
      Node node{Rational(k), Rational(value(k))};
      (i < fit ? nodes : checks).push_back(std::move(node));
    }
    UniPolynomial branch = interpolate_univariate(nodes);
    const std::string name = "kernel branch (" + std::string(parity == 0 ? "even" : "odd") + " k)";
    if (!branch.is_odd()) throw ConsistencyError(name + " is not an odd polynomial");
    if (branch.degree() > degree) throw ConsistencyError(name + " exceeds the expected degree");
    for (const auto& [k, v] : checks)
      if (branch.evaluate(k) != v) throw ConsistencyError(name + " misses a validation point");
    (parity == 0 ? out.even_branch : out.odd_branch) = std::move(branch);
  }
  return out;
}

const ParityKernel& kernel(const KernelKey& key) {
  static std::mutex mu;
  static std::map<KernelKey, std::unique_ptr<const ParityKernel>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const ParityKernel>(build_kernel(key));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(key, std::move(built));
  return *it->second;
}

Rational kernel_eval(const ParityKernel& kernel, long k) { return kernel.branch(k).evaluate(Rational(k)); }

}  // namespace moduli
