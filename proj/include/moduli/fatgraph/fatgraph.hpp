#pragma once

#include "moduli/errors.hpp"

#include <string>
#include <vector>

namespace moduli {

/// Labeled fatgraph as a permutation pair on oriented edges (darts) 0..2E-1.
///
/// tau0 rotates the darts leaving a common vertex; tau1 swaps the two
/// orientations of each edge. Boundary cycles are the cycles of
/// tau2 = tau0 o tau1 (apply tau1 first), ordered by smallest dart;
/// boundary_labels[c] is the label in 1..n of the c-th cycle. An empty
/// boundary_labels means "unlabeled".
struct FatGraph {
  std::vector<int> tau0;
  std::vector<int> tau1;
  std::vector<int> boundary_labels;

  friend bool operator==(const FatGraph&, const FatGraph&) = default;
};

using Cycle = std::vector<int>;

class FatGraphError : public RefusalError {
public:
  enum class Kind {
    NotPermutation,
    Tau1FixedPoint,
    Tau1NotInvolution,
    ShortVertex,
    Disconnected,
    NonIntegralGenus,
    BadLabels,
  };
  FatGraphError(Kind kind, const std::string& what) : RefusalError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Cycles of a permutation, each starting at its smallest element, ordered
/// by that element.
std::vector<Cycle> cycles_of(const std::vector<int>& perm);

/// Throws FatGraphError naming the first violated invariant.
void validate(const FatGraph& graph);

int edge_count(const FatGraph& graph);
int vertex_count(const FatGraph& graph);
std::vector<Cycle> boundary_cycles(const FatGraph& graph);
int genus(const FatGraph& graph);
/// boundary cycle index of every dart
std::vector<int> boundary_of_dart(const FatGraph& graph);

/// n x E matrix; row i is the boundary labeled i+1, column e is the edge
/// whose smaller dart is the e-th smallest "first dart" of a tau1 pair.
struct IncidenceSystem {
  std::vector<std::vector<int>> matrix;

  std::size_t rows() const { return matrix.size(); }
  std::size_t cols() const { return matrix.empty() ? 0 : matrix.front().size(); }
  friend bool operator==(const IncidenceSystem&, const IncidenceSystem&) = default;
};

IncidenceSystem incidence_matrix(const FatGraph& graph);

/// Order of the group of dart permutations commuting with tau0 and tau1
/// that fix every boundary cycle (the labeled automorphism group). For an
/// unlabeled graph, all map automorphisms.
int automorphism_count(const FatGraph& graph);

/// Equal iff the labeled fatgraphs are isomorphic. Byte 0 is the dart count.
std::string canonical_form(const FatGraph& graph);

}  // namespace moduli
