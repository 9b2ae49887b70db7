#include "moduli/recursion/numeric.hpp"

#include "moduli/algebra/interpolate.hpp"
#include "moduli/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace moduli {

Rational base_n03(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  return (b1 + b2 + b3) % 2 == 0 ? Rational(1) : Rational(0);
}

Rational base_n11(std::int64_t b) {
  if (b % 2 != 0) return 0;
  return make_rational(b * b - 4, 48);
}

namespace {

using Key = std::tuple<int, int, std::vector<std::int64_t>>;

class Memo {
public:
  bool find(const Key& key, Rational& out) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(Key key, const Rational& value) {
    std::unique_lock lock(mu_);
    table_.try_emplace(std::move(key), value);
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

private:
  mutable std::shared_mutex mu_;
  std::map<Key, Rational> table_;
};

Memo& memo() {
  static Memo m;
  return m;
}

Rational lookup(int g, int n, std::vector<std::int64_t> b);

Rational compute(int g, int n, const std::vector<std::int64_t>& b) {
  Rational pair_part(0);
  std::vector<std::int64_t> args;
  if (is_stable(g, n - 1)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t s = b[i] + b[j];
        for (std::int64_t p = 1; p < s; ++p) {
          args.assign(1, p);
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) args.push_back(b[k]);
          const Rational v = lookup(g, n - 1, args);
          if (v != 0) pair_part += v * (p * (s - p));
        }
      }
  }

  Rational bracket_part(0);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> rest;
    for (int k = 0; k < n; ++k)
      if (k != i) rest.push_back(b[k]);
    const int m = n - 1;
    for (std::int64_t p = 1; p + 1 < b[i]; ++p)
      for (std::int64_t q = 1; p + q < b[i]; ++q) {
        const std::int64_t r = b[i] - p - q;
        Rational t(0);
        if (is_stable(g - 1, n + 1)) {
          args = {p, q};
          args.insert(args.end(), rest.begin(), rest.end());
          t += lookup(g - 1, n + 1, args);
        }
        for (int g1 = 0; g1 <= g; ++g1)
          for (unsigned mask = 0; mask < (1u << m); ++mask) {
            const int n1 = std::popcount(mask) + 1, n2 = m - n1 + 2;
            if (!is_stable(g1, n1) || !is_stable(g - g1, n2)) continue;
            std::vector<std::int64_t> left{p}, right{q};
            for (int k = 0; k < m; ++k) (mask >> k & 1u ? left : right).push_back(rest[k]);
            const Rational a = lookup(g1, n1, left);
            if (a == 0) continue;
            t += a * lookup(g - g1, n2, right);
          }
        if (t != 0) bracket_part += t * (p * q * r);
      }
  }
  const std::int64_t total = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  return (pair_part + bracket_part / 2) / total;
}

Rational lookup(int g, int n, std::vector<std::int64_t> b) {
  if (std::accumulate(b.begin(), b.end(), std::int64_t{0}) % 2 != 0) return 0;
  if (g == 0 && n == 3) return base_n03(b[0], b[1], b[2]);
  if (g == 1 && n == 1) return base_n11(b[0]);
  std::sort(b.begin(), b.end());
  Key key{g, n, std::move(b)};
  Rational value;
  if (memo().find(key, value)) return value;
  value = compute(g, n, std::get<2>(key));
  memo().insert(std::move(key), value);
  return value;
}

}  // namespace

Rational eval_recursive(int g, int n, std::span<const std::int64_t> b) {
  require_stable(g, n);
  if (static_cast<int>(b.size()) != n)
    throw RefusalError("expected " + std::to_string(n) + " boundary lengths, got " + std::to_string(b.size()));
  for (auto v : b)
    if (v <= 0) throw RefusalError("boundary lengths must be positive integers");
  return lookup(g, n, std::vector<std::int64_t>(b.begin(), b.end()));
}

std::size_t eval_memo_size() { return memo().size(); }

LatticeCountPolynomial build_polynomial(int g, int n) {
  require_stable(g, n);
  const int degree = 3 * g - 3 + n;
  const int width = degree + 1;
  LatticeCountPolynomial family{g, n, std::vector<SquarePolynomial>(n + 1, SquarePolynomial(n))};

  for (int k = 0; k <= n; k += 2) {
    GridValues grid;
    std::vector<int> idx(n, 0);
    std::vector<std::int64_t> b(n);
    std::vector<Rational> x(n);
    while (true) {
      for (int v = 0; v < n; ++v) {
        b[v] = v < k ? 2 * idx[v] + 1 : 2 * idx[v] + 2;
        x[v] = Rational(b[v] * b[v]);
      }
      grid.emplace(x, eval_recursive(g, n, b));
      int v = n - 1;
      while (v >= 0 && ++idx[v] == width) idx[v--] = 0;
      if (v < 0) break;
    }
    SquarePolynomial p = tensor_interpolate(n, degree, grid);
    if (p.total_degree() > degree)
      throw ConsistencyError("fitted class exceeds total degree 3g-3+n for (" + std::to_string(g) + "," +
                             std::to_string(n) + ")");
    for (int v = 0; v < n; ++v) b[v] = v < k ? 2 * width + 1 : 2 * width + 2;
    family.classes[k] = std::move(p);
    if (family.evaluate(b) != eval_recursive(g, n, b))
      throw ConsistencyError("fitted class misses the off-grid validation point");
  }
  return family;
}

}  // namespace moduli
