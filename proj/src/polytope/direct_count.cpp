#include "moduli/polytope/polytope.hpp"

#include "moduli/fatgraph/enumerate.hpp"

namespace moduli {

namespace {

void check_lengths(int n, std::span<const std::int64_t> b) {
  if (static_cast<int>(b.size()) != n)
    throw RefusalError("expected " + std::to_string(n) + " boundary lengths, got " + std::to_string(b.size()));
  for (auto v : b)
    if (v <= 0) throw RefusalError("boundary lengths must be positive integers");
}

}  // namespace

Rational direct_count(int g, int n, std::span<const std::int64_t> b) {
  require_stable(g, n);
  check_lengths(n, b);
  Rational total(0);
  for (const auto& [graph, aut] : enumerate(g, n)) {
    const Integer c = count_solutions(incidence_matrix(graph), b);
    if (c != 0) total += Rational(c) / aut;
  }
  return total;
}

DessinListing list_dessins(int g, int n, std::span<const std::int64_t> b) {
  require_stable(g, n);
  check_lengths(n, b);
  DessinListing out{{}, Rational(0)};
  for (const auto& [graph, aut] : enumerate(g, n)) {
    auto set = enumerate_solutions(incidence_matrix(graph), b);
    if (set.solutions.empty()) continue;
    out.weighted_total += Rational(static_cast<long>(set.solutions.size())) / aut;
    out.entries.push_back({graph, aut, std::move(set.solutions)});
  }
  return out;
}

}  // namespace moduli
