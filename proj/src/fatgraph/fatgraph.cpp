#include "moduli/fatgraph/fatgraph.hpp"

#include "moduli/fatgraph/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace moduli {

std::vector<Cycle> cycles_of(const std::vector<int>& perm) {
  std::vector<Cycle> out;
  std::vector<char> seen(perm.size(), 0);
  for (int start = 0; start < static_cast<int>(perm.size()); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

using Kind = FatGraphError::Kind;

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> hit(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

std::vector<int> compose_tau2(const FatGraph& g) {
  std::vector<int> t2(g.tau0.size());
  for (std::size_t x = 0; x < t2.size(); ++x) t2[x] = g.tau0[g.tau1[x]];
  return t2;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

void validate(const FatGraph& g) {
  const auto size = g.tau0.size();
  if (size == 0 || g.tau1.size() != size || !is_permutation(g.tau0) || !is_permutation(g.tau1))
    throw FatGraphError(Kind::NotPermutation, "tau0 and tau1 must be permutations of the same dart set");
  for (std::size_t x = 0; x < size; ++x) {
    if (g.tau1[x] == static_cast<int>(x))
      throw FatGraphError(Kind::Tau1FixedPoint, "tau1 fixes dart " + std::to_string(x + 1));
    if (g.tau1[g.tau1[x]] != static_cast<int>(x))
      throw FatGraphError(Kind::Tau1NotInvolution, "tau1 is not an involution");
  }
  for (const auto& c : cycles_of(g.tau0))
    if (c.size() < 3)
      throw FatGraphError(Kind::ShortVertex, "vertex of valency " + std::to_string(c.size()) +
                                                 " at dart " + std::to_string(c.front() + 1));

  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t x = 0; x < size; ++x) {
    parent[find(parent, x)] = find(parent, g.tau0[x]);
    parent[find(parent, x)] = find(parent, g.tau1[x]);
  }
  for (std::size_t x = 0; x < size; ++x)
    if (find(parent, x) != find(parent, 0))
      throw FatGraphError(Kind::Disconnected, "tau0 and tau1 do not act transitively");

  const int e = static_cast<int>(size / 2);
  const int v = static_cast<int>(cycles_of(g.tau0).size());
  const int n = static_cast<int>(cycles_of(compose_tau2(g)).size());
  const int twice_genus = 2 - v + e - n;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw FatGraphError(Kind::NonIntegralGenus, "V - E + n = " + std::to_string(v - e + n) +
                                                    " is not 2 - 2g for an integer g >= 0");

  if (!g.boundary_labels.empty()) {
    std::vector<int> sorted = g.boundary_labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 1);
    if (sorted != want)
      throw FatGraphError(Kind::BadLabels, "boundary labels must be a bijection onto 1.." + std::to_string(n));
  }
}

int edge_count(const FatGraph& g) { return static_cast<int>(g.tau1.size() / 2); }

int vertex_count(const FatGraph& g) { return static_cast<int>(cycles_of(g.tau0).size()); }

std::vector<Cycle> boundary_cycles(const FatGraph& g) { return cycles_of(compose_tau2(g)); }

std::vector<int> boundary_of_dart(const FatGraph& g) {
  std::vector<int> out(g.tau0.size(), -1);
  const auto cs = boundary_cycles(g);
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int x : cs[c]) out[x] = static_cast<int>(c);
  return out;
}

int genus(const FatGraph& g) {
  const int n = static_cast<int>(boundary_cycles(g).size());
  return (2 - vertex_count(g) + edge_count(g) - n) / 2;
}

IncidenceSystem incidence_matrix(const FatGraph& g) {
  const auto owner = boundary_of_dart(g);
  const int n = static_cast<int>(boundary_cycles(g).size());
  std::vector<int> row_of_cycle(n);
  for (int c = 0; c < n; ++c) row_of_cycle[c] = g.boundary_labels.empty() ? c : g.boundary_labels[c] - 1;

  IncidenceSystem sys;
  sys.matrix.assign(n, std::vector<int>(edge_count(g), 0));
  int col = 0;
  for (std::size_t x = 0; x < g.tau1.size(); ++x) {
    const int y = g.tau1[x];
    if (y < static_cast<int>(x)) continue;
    ++sys.matrix[row_of_cycle[owner[x]]][col];
    ++sys.matrix[row_of_cycle[owner[y]]][col];
    ++col;
  }
  return sys;
}

int automorphism_count(const FatGraph& g) {
  const auto colors = detail::dart_colors(g);
  const auto base = detail::rooted_code(g, 0, colors);
  int count = 0;
  for (int r = 0; r < static_cast<int>(g.tau0.size()); ++r)
    if (detail::rooted_code(g, r, colors) == base) ++count;
  return count;
}

std::string canonical_form(const FatGraph& g) {
  const auto colors = detail::dart_colors(g);
  std::string best;
  for (int r = 0; r < static_cast<int>(g.tau0.size()); ++r) {
    auto code = detail::rooted_code(g, r, colors);
    if (r == 0 || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace moduli
