#pragma once

#include "moduli/algebra/rational.hpp"
#include "moduli/algebra/unipoly.hpp"

#include <string>
#include <vector>

namespace moduli {

enum class Parity { Even, Odd, Free };

bool admits(Parity parity, long value);
std::string to_string(Parity parity);

/// Sum of p^a * q over positive p + q = k with the stated parities.
Integer brute_pair_sum(unsigned a, Parity parity_p, Parity parity_q, long k);

/// Sum of p^a * q^b * r over positive p + q + r = k with the stated parities.
Integer brute_triple_sum(unsigned a, unsigned b, Parity parity_p, Parity parity_q, Parity parity_r, long k);

/// Which parity-restricted power sum a kernel represents. Arity 2 sums
/// p^{exponents[0]} q; arity 3 sums p^{exponents[0]} q^{exponents[1]} r.
/// `parities` has one entry per summation variable.
struct KernelKey {
  int arity = 2;
  std::vector<unsigned> exponents;
  std::vector<Parity> parities;

  friend auto operator<=>(const KernelKey&, const KernelKey&) = default;
};

/// S_m: sum over p + q = k, q even, of p^{2m+1} q.
KernelKey pair_kernel_key(unsigned m);
/// R_{m,m'}: sum over p + q + r = k, r even, of p^{2m+1} q^{2m'+1} r.
KernelKey triple_kernel_key(unsigned m, unsigned m2);
/// Refinement with p, q parities fixed and r's parity induced by k.
KernelKey triple_kernel_key(unsigned m, unsigned m2, Parity parity_p, Parity parity_q);

/// Quasi-polynomial of period two: one odd polynomial per parity of k.
struct ParityKernel {
  KernelKey key;
  UniPolynomial even_branch;
  UniPolynomial odd_branch;

  int degree() const;
  const UniPolynomial& branch(long k) const { return k % 2 == 0 ? even_branch : odd_branch; }
};

/// Brute-force value of the kernel's sum at k >= 1.
Integer brute_kernel_sum(const KernelKey& key, long k);

/// Fits each branch through degree+2 brute-force values of that parity and
/// checks it on two more; throws ConsistencyError if a branch is not odd, is
/// of the wrong degree, or misses a check point.
ParityKernel build_kernel(const KernelKey& key);

/// Process-wide cache over build_kernel; safe to call concurrently.
const ParityKernel& kernel(const KernelKey& key);

/// Evaluates the branch of k's parity as a polynomial, so negative k gives
/// minus the value at -k.
Rational kernel_eval(const ParityKernel& kernel, long k);

}  // namespace moduli
