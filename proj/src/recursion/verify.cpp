#include "moduli/recursion/verify.hpp"

#include "moduli/errors.hpp"
#include "moduli/recursion/numeric.hpp"

#include <bit>
#include <numeric>
#include <random>

namespace moduli {

namespace {

Rational value(FamilyStore& store, int g, int n, const std::vector<std::int64_t>& b) {
  if (!is_stable(g, n)) return 0;
  return store.get(g, n).evaluate(b);
}

}  // namespace

RecursionReport verify_recursion(FamilyStore& store, int g, int n,
                                 const std::vector<std::vector<std::int64_t>>& samples) {
  require_stable(g, n);
  RecursionReport report{g, n, 0, {}};
  for (const auto& b : samples) {
    if (static_cast<int>(b.size()) != n) throw RefusalError("sample has the wrong length");
    ++report.checked;
    const Rational value_here = store.get(g, n).evaluate(b);
    if (g == 0 && n == 3) {
      if (value_here != base_n03(b[0], b[1], b[2])) report.mismatches.push_back(b);
      continue;
    }
    if (g == 1 && n == 1) {
      const Rational want = b[0] % 2 == 0 ? loop_sum_n11(b[0]) : Rational(0);
      if (value_here * b[0] != want) report.mismatches.push_back(b);
      continue;
    }
    Rational pairs(0), bracket(0);
    std::vector<std::int64_t> args;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t s = b[i] + b[j];
        for (std::int64_t p = 1; p < s; ++p) {
          args.assign(1, p);
          for (int k = 0; k < n; ++k)
            if (k != i && k != j) args.push_back(b[k]);
          pairs += value(store, g, n - 1, args) * (p * (s - p));
        }
      }
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> rest;
      for (int k = 0; k < n; ++k)
        if (k != i) rest.push_back(b[k]);
      const int m = n - 1;
      for (std::int64_t p = 1; p + 1 < b[i]; ++p)
        for (std::int64_t q = 1; p + q < b[i]; ++q) {
          Rational t(0);
          args = {p, q};
          args.insert(args.end(), rest.begin(), rest.end());
          if (g >= 1) t += value(store, g - 1, n + 1, args);
          for (int g1 = 0; g1 <= g; ++g1)
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
              std::vector<std::int64_t> left{p}, right{q};
              for (int k = 0; k < m; ++k) (mask >> k & 1u ? left : right).push_back(rest[k]);
              const int n1 = static_cast<int>(left.size()), n2 = static_cast<int>(right.size());
              if (!is_stable(g1, n1) || !is_stable(g - g1, n2)) continue;
              t += value(store, g1, n1, left) * value(store, g - g1, n2, right);
            }
          bracket += t * (p * q * (b[i] - p - q));
        }
    }
    const std::int64_t total = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (value_here * total != pairs + bracket / 2) report.mismatches.push_back(b);
  }
  return report;
}

std::vector<std::vector<std::int64_t>> sample_points(int n, int count, std::uint64_t seed, int max_length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, max_length);
  std::vector<std::vector<std::int64_t>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<std::int64_t> b(n);
    for (auto& v : b) v = dist(rng);
    if (std::accumulate(b.begin(), b.end(), std::int64_t{0}) % 2 == 0) out.push_back(std::move(b));
  }
  return out;
}

Rational loop_sum_n11(std::int64_t b) {
  Rational sum(0);
  for (std::int64_t p = 1; 2 * p < b; ++p) sum += Rational(p * (b - 2 * p));
  return sum / 2;
}

}  // namespace moduli
