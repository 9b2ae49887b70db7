#pragma once

#include "moduli/algebra/polynomial.hpp"
#include "moduli/recursion/family.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace moduli {

/// Penner: (-1)^(n-1) (2g+n-3)!/(2g-2)! zeta(1-2g) for g > 0,
/// (-1)^(n-1) (n-3)! for g = 0.
Rational euler_closed(int g, int n);

/// The all-even class polynomial at b = 0. This is polynomial extrapolation;
/// the lattice count itself is undefined at b = 0.
Rational euler_from_polynomial(const LatticeCountPolynomial& family);

/// sum over Fat_{g,n} of (-1)^(E-n) / |Aut|.
Rational euler_from_fatgraphs(int g, int n);

struct IntersectionTable {
  int g = 0;
  int n = 0;
  std::map<std::vector<unsigned>, Rational> values;  // d -> <tau_d1 ... tau_dn>
};

/// <tau_d> = c_d 2^(6g-6+2n-g) d1!...dn!, c_d the coefficient of x^d in the
/// top-degree part.
IntersectionTable intersection_numbers(const LatticeCountPolynomial& family);

/// Homogeneous top-degree part; throws ConsistencyError if the nonzero
/// classes disagree on it.
SquarePolynomial volume_polynomial(const LatticeCountPolynomial& family);

struct VanishingReport {
  int bound = 0;                     // sum b < bound is asserted to vanish
  std::size_t checked = 0;
  std::vector<std::vector<std::int64_t>> violations;
  int literal_bound = 0;             // 4g+2n
  /// Points with bound <= sum b < literal_bound and nonzero value.
  std::vector<std::pair<std::vector<std::int64_t>, Rational>> literal_counterexamples;

  bool ok() const { return violations.empty(); }
};

/// Every positive b with even total below 4g+2n-2 must give 0. Points up to
/// 4g+2n are evaluated and the nonzero ones past the bound recorded.
VanishingReport check_vanishing(const LatticeCountPolynomial& family);

/// N_{g,1}(b) = sum_k c_k C(b/2 - 1, k - 1) over even b.
struct BinomialBasisExpansion {
  int g = 0;
  std::map<int, Rational> coefficients;  // k -> c_k, k = 2g .. 6g-3
};

/// Throws ConsistencyError if a coefficient outside [2g, 6g-3] is nonzero.
BinomialBasisExpansion binomial_basis_n1(const LatticeCountPolynomial& family);

/// 2 (6g-5)! / (12^g g! (3g-3)!)
Rational census_top(int g);
/// (4g-1)! / (4^g (2g+1)!)
Rational census_bottom(int g);

/// Weighted count of Fat_{g,n} graphs with e edges: sum of 1/|Aut|.
std::map<int, Rational> census_by_edges(int g, int n);

struct ReportOptions {
  bool fatgraphs = false;  // include enumeration-based values
};

/// Euler values, intersection table, volume part, vanishing and (n = 1)
/// census for one family.
nlohmann::json invariants_report(const LatticeCountPolynomial& family, const ReportOptions& options = {});

}  // namespace moduli
