#pragma once

#include "moduli/algebra/rational.hpp"

namespace moduli {

Integer factorial(unsigned n);
/// C(n, k) for integer n (possibly negative) via the falling factorial; 0 for k < 0.
Rational binomial(const Rational& n, long k);

/// B_m for even m >= 2 (convention B_1 = -1/2 in the underlying recurrence).
Rational bernoulli(int m);

/// zeta(1 - 2g) = -B_{2g} / (2g), g >= 1.
Rational zeta_negative(int g);

}  // namespace moduli
