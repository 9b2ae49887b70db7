#pragma once

#include "moduli/algebra/polynomial.hpp"
#include "moduli/algebra/unipoly.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace moduli {

using Node = std::pair<Rational, Rational>;

/// The unique polynomial of degree < nodes.size() through every node.
/// Throws RefusalError on an empty node list or repeated abscissae.
UniPolynomial interpolate_univariate(std::span<const Node> nodes);

/// Grid keyed by the node tuple (one abscissa per variable).
using GridValues = std::map<std::vector<Rational>, Rational>;

/// Exact tensor-product interpolation: the grid must be a full product of
/// degree_bound+1 distinct abscissae per axis. Returns the unique polynomial
/// of per-variable degree <= degree_bound through every grid value.
SquarePolynomial tensor_interpolate(std::size_t nvars, unsigned degree_bound, const GridValues& grid);

}  // namespace moduli
