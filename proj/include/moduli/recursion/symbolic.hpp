#pragma once

#include "moduli/recursion/family.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>

namespace moduli {

class FamilyStore;

/// The exact families for the two base types.
LatticeCountPolynomial base_family(int g, int n);

/// Builds N_{g,n} from the symmetry-broken recursion
///
///   b_d N(b) = sum_{j != d} 1/2 [ S(b_d + b_j) + S(b_d - b_j) ]-terms
///            + 1/2 sum_{p+q+r=b_d} p q r [ N_{g-1,n+1} + splittings ]
///
/// where every monomial of a lower family becomes a parity kernel evaluated
/// on b_d +- b_j or b_d. The right side is assembled as a polynomial in the
/// b_i (not b_i^2), divided exactly by b_d, and its exponents halved.
/// Throws ConsistencyError if b_d does not divide the right side or an
/// exponent fails to be even after division.
LatticeCountPolynomial symbolic_step(int g, int n, FamilyStore& lower, int distinguished = 0);

/// Right side of the symmetry-broken recursion for one parity pattern, as a
/// polynomial in the b_i.
SquarePolynomial rec1_rhs(int g, int n, const std::vector<bool>& odd, int distinguished, FamilyStore& lower);

/// Right side of the symmetric recursion (sum over i<j, and all i), as a
/// polynomial in the b_i.
SquarePolynomial rec2_rhs(int g, int n, const std::vector<bool>& odd, FamilyStore& lower);

/// Class polynomial in x_i = b_i^2 rewritten in the b_i (exponents doubled).
SquarePolynomial to_linear_variables(const SquarePolynomial& square);

/// Process-wide-safe cache of families built by symbolic_step, optionally
/// persisted as <dir>/N_<g>_<n>.json. Unreadable or mismatched cache files
/// are rebuilt and overwritten (write-then-rename).
class FamilyStore {
public:
  FamilyStore() = default;
  explicit FamilyStore(std::filesystem::path cache_dir) : cache_dir_(std::move(cache_dir)) {}

  const LatticeCountPolynomial& get(int g, int n);
  bool contains(int g, int n) const;
  void put(LatticeCountPolynomial family);

  /// Cache files rejected (schema mismatch) since construction.
  int rejected_cache_files() const { return rejected_; }

private:
  std::optional<LatticeCountPolynomial> load(int g, int n);
  void save(const LatticeCountPolynomial& family) const;

  std::optional<std::filesystem::path> cache_dir_;
  mutable std::recursive_mutex mu_;
  std::map<std::pair<int, int>, std::unique_ptr<const LatticeCountPolynomial>> families_;
  int rejected_ = 0;
};

}  // namespace moduli
