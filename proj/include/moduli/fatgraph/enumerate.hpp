#pragma once

#include "moduli/fatgraph/fatgraph.hpp"

#include <vector>

namespace moduli {

struct EnumeratedGraph {
  FatGraph graph;      // labeled
  int automorphisms;   // |Aut| of the labeled graph
};

/// Unlabeled fatgraph class with its full map automorphism group and the
/// permutation each automorphism induces on boundary cycles.
struct UnlabeledClass {
  FatGraph graph;                                  // boundary_labels empty
  std::vector<std::vector<int>> boundary_action;   // one row per automorphism
};

/// Edge-count range of Fat_{g,n}: one vertex gives 2g+n-1 edges, all
/// trivalent gives 6g-6+3n.
int min_edges(int g, int n);
int max_edges(int g, int n);

/// One representative per isomorphism class of unlabeled fatgraphs of type
/// (g,n) with e edges, in generation order.
std::vector<UnlabeledClass> enumerate_unlabeled(int g, int n, int edges);

/// One representative per isomorphism class of labeled fatgraphs of type
/// (g,n), sorted by canonical_form. Results are cached per (g,n).
/// Throws RefusalError for unstable (g,n).
const std::vector<EnumeratedGraph>& enumerate(int g, int n);

}  // namespace moduli
