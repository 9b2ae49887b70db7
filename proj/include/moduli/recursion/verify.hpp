#pragma once

#include "moduli/recursion/symbolic.hpp"

#include <cstdint>
#include <vector>

namespace moduli {

struct RecursionReport {
  int g = 0;
  int n = 0;
  std::size_t checked = 0;
  std::vector<std::vector<std::int64_t>> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Checks (sum b_i) N_{g,n}(b) against the right side of the symmetric
/// recursion at every sample, with every N on both sides read off the
/// families in `store`. The base types are checked against their own
/// identities instead: N_{0,3} against the parity rule and N_{1,1} against
/// b N(b) = loop_sum_n11(b).
RecursionReport verify_recursion(FamilyStore& store, int g, int n,
                                 const std::vector<std::vector<std::int64_t>>& samples);

/// `count` pseudo-random positive vectors with even total and entries in
/// [1, max_length]; deterministic in `seed`.
std::vector<std::vector<std::int64_t>> sample_points(int n, int count, std::uint64_t seed, int max_length = 12);

/// 1/2 sum over 2p + q = b (p, q >= 1) of p q; equals b N_{1,1}(b) for even b.
Rational loop_sum_n11(std::int64_t b);

}  // namespace moduli
