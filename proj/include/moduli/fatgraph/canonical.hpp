#pragma once

#include "moduli/fatgraph/fatgraph.hpp"

#include <string>
#include <vector>

namespace moduli::detail {

/// Boundary label of the cycle through each dart, or 0 for unlabeled graphs.
std::vector<int> dart_colors(const FatGraph& g);

/// Traversal from `root`: darts are numbered in discovery order, visiting
/// tau1(d) then tau0(d) for each dart d in that order. The code lists, per
/// dart in that order, (number of tau0(d), number of tau1(d), color of d),
/// preceded by the dart count. Two rooted fatgraphs are isomorphic iff their
/// codes agree. Requires a connected graph with fewer than 256 darts.
std::string rooted_code(const FatGraph& g, int root, const std::vector<int>& colors);

/// Dart order of the traversal above (order[i] is the dart numbered i).
std::vector<int> traversal_order(const FatGraph& g, int root);

}  // namespace moduli::detail
