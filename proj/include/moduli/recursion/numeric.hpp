#pragma once

#include "moduli/algebra/rational.hpp"
#include "moduli/recursion/family.hpp"

#include <cstdint>
#include <span>

namespace moduli {

/// N_{0,3}: 1 when b1 + b2 + b3 is even, else 0.
Rational base_n03(std::int64_t b1, std::int64_t b2, std::int64_t b3);
/// N_{1,1}: (b^2 - 4)/48 for even b, else 0.
Rational base_n11(std::int64_t b);

/// N_{g,n}(b) from the lattice-count recursion
///
///   (sum b_i) N_{g,n}(b) = sum_{i<j} sum_{p+q=b_i+b_j} p q N_{g,n-1}(p, b minus i,j)
///     + 1/2 sum_i sum_{p+q+r=b_i} p q r [ N_{g-1,n+1}(p, q, b minus i)
///         + sum_{g1+g2=g, I+J = rest} N_{g1,|I|+1}(p, b_I) N_{g2,|J|+1}(q, b_J) ]
///
/// with all compositions positive and unstable terms zero, starting from
/// N_{0,3} and N_{1,1}. Results are memoized on (g, n, sorted b) in a
/// process-wide table.
Rational eval_recursive(int g, int n, std::span<const std::int64_t> b);

/// Number of memoized values (for diagnostics).
std::size_t eval_memo_size();

/// Fits every even parity class on a tensor grid of eval_recursive values:
/// D+1 nodes per axis with D = 3g-3+n, odd slots at b = 1,3,..,2D+1 and even
/// slots at b = 2,4,..,2D+2, then checks one off-grid point per class.
LatticeCountPolynomial build_polynomial(int g, int n);

}  // namespace moduli
