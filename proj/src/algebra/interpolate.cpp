#include "moduli/algebra/interpolate.hpp"

#include "moduli/errors.hpp"

#include <algorithm>
#include <set>

namespace moduli {

namespace {

// Newton divided differences, then Horner expansion into the monomial basis.
std::vector<Rational> newton_to_monomial(std::span<const Rational> xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  std::vector<Rational> poly{ys[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly = poly * (x - xs[i]) + ys[i]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += ys[i];
    poly = std::move(next);
  }
  return poly;
}

void require_distinct(std::span<const Rational> xs) {
  std::vector<Rational> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw RefusalError("interpolation is ill-posed: repeated abscissa");
}

}  // namespace

UniPolynomial interpolate_univariate(std::span<const Node> nodes) {
  if (nodes.empty()) throw RefusalError("interpolation needs at least one node");
  std::vector<Rational> xs, ys;
  for (const auto& [x, y] : nodes) {
    xs.push_back(x);
    ys.push_back(y);
  }
  require_distinct(xs);
  return UniPolynomial(newton_to_monomial(xs, std::move(ys)));
}

SquarePolynomial tensor_interpolate(std::size_t nvars, unsigned degree_bound, const GridValues& grid) {
  const std::size_t width = degree_bound + 1;
  if (nvars == 0) throw RefusalError("tensor interpolation needs at least one variable");

  std::vector<std::vector<Rational>> axes(nvars);
  {
    std::vector<std::set<Rational>> seen(nvars);
    for (const auto& [key, value] : grid) {
      if (key.size() != nvars) throw RefusalError("grid node arity does not match nvars");
      for (std::size_t v = 0; v < nvars; ++v) seen[v].insert(key[v]);
    }
    for (std::size_t v = 0; v < nvars; ++v) {
      if (seen[v].size() != width)
        throw RefusalError("incomplete interpolation grid: axis " + std::to_string(v) + " has " +
                           std::to_string(seen[v].size()) + " abscissae, need " +
                           std::to_string(width));
      axes[v].assign(seen[v].begin(), seen[v].end());
    }
  }
  std::size_t total = 1;
  for (std::size_t v = 0; v < nvars; ++v) total *= width;
  if (grid.size() != total) throw RefusalError("incomplete interpolation grid");

  // Dense row-major tensor, variable 0 slowest. std::map iteration order of
  // the keys is exactly this order because every axis is sorted.
  std::vector<Rational> data;
  data.reserve(total);
  for (const auto& [key, value] : grid) data.push_back(value);

  std::size_t stride = total;
  for (std::size_t v = 0; v < nvars; ++v) {
    stride /= width;
    const std::size_t block = stride * width;
    std::vector<Rational> fiber(width);
    for (std::size_t base = 0; base < total; base += block)
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t k = 0; k < width; ++k) fiber[k] = data[base + off + k * stride];
        auto coeffs = newton_to_monomial(axes[v], fiber);
        coeffs.resize(width);
        for (std::size_t k = 0; k < width; ++k) data[base + off + k * stride] = std::move(coeffs[k]);
      }
  }

  SquarePolynomial out(nvars);
  Exponent e(nvars, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t v = nvars; v-- > 0;) {
      e[v] = static_cast<unsigned>(rest % width);
      rest /= width;
    }
    out.add_term(e, data[idx]);
  }
  return out;
}

}  // namespace moduli
