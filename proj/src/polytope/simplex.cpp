#include "moduli/polytope/polytope.hpp"

#include "moduli/errors.hpp"

#include <numeric>

namespace moduli {

unsigned SimplexSpec::weight_degree() const { return std::accumulate(weight.begin(), weight.end(), 0u); }

namespace {

void walk(const SimplexSpec& spec, std::size_t axis, long budget, bool interior, Integer& weight,
          Rational& sum) {
  if (axis == spec.dimension()) {
    if (interior && budget <= 0) return;  // strict inequality
    sum += weight;
    return;
  }
  const long c = spec.constraint[axis];
  const unsigned w = axis < spec.weight.size() ? spec.weight[axis] : 0;
  for (long v = interior ? 1 : 0; c * v <= budget; ++v) {
    Integer factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(v), w);
    Integer next = weight * factor;
    if (next == 0 && !interior) {
      // zero weight contributes nothing below this point
      continue;
    }
    walk(spec, axis + 1, budget - c * v, interior, next, sum);
  }
}

}  // namespace

Rational weighted_simplex_count(const SimplexSpec& spec, long k, bool interior) {
  if (k < 0) throw RefusalError("dilation factor must be nonnegative");
  if (spec.weight.size() > spec.dimension()) throw RefusalError("weight has more exponents than dimensions");
  for (int c : spec.constraint)
    if (c <= 0) throw RefusalError("simplex constraint coefficients must be positive");
  if (spec.bound <= 0) throw RefusalError("simplex bound must be positive");
  Rational sum(0);
  Integer weight(1);
  walk(spec, 0, k * spec.bound, interior, weight, sum);
  return sum;
}

}  // namespace moduli
