#pragma once

#include "moduli/algebra/rational.hpp"
#include "moduli/fatgraph/fatgraph.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace moduli {

using LengthVector = std::vector<std::int64_t>;

/// Strictly positive integer solutions of A x = b, lexicographically sorted.
/// Each solution is an integer metric on the fatgraph behind A (a dessin).
struct SolutionSet {
  IncidenceSystem system;
  LengthVector b;
  std::vector<LengthVector> solutions;
};

/// Number of x in Z_{>0}^E with A x = b. Zero entries of b are allowed; x
/// stays strictly positive. Requires column sums of A to be 1 or 2 entries
/// totalling 2 (every incidence matrix qualifies).
Integer count_solutions(const IncidenceSystem& system, std::span<const std::int64_t> b);
SolutionSet enumerate_solutions(const IncidenceSystem& system, std::span<const std::int64_t> b);

/// {"A": [[...]], "b": [...], "solutions": [[...], ...]}
nlohmann::json to_json(const SolutionSet& set);

/// {x >= 0 : c . x <= bound} with weight x^weight.
struct SimplexSpec {
  std::vector<int> constraint;
  int bound = 1;
  std::vector<unsigned> weight;

  std::size_t dimension() const { return constraint.size(); }
  unsigned weight_degree() const;
};

/// Sum of the weight over integer points of the k-th dilate (closed), or of
/// its interior (x > 0, c . x < k * bound). k >= 0.
Rational weighted_simplex_count(const SimplexSpec& spec, long k, bool interior);

/// Weighted lattice count N_{g,n}(b) = sum over Fat_{g,n} of N_Gamma(b)/|Aut Gamma|.
Rational direct_count(int g, int n, std::span<const std::int64_t> b);

/// Integer metrics realizing b, grouped by labeled fatgraph (graphs with no
/// solution omitted), plus the weighted total.
struct DessinListing {
  struct Entry {
    FatGraph graph;
    int automorphisms;
    std::vector<LengthVector> metrics;
  };
  std::vector<Entry> entries;
  Rational weighted_total;
};

DessinListing list_dessins(int g, int n, std::span<const std::int64_t> b);

}  // namespace moduli
