#pragma once

#include <map>
#include <string>

#include "qpluck/poly.hpp"

namespace qpluck {

/// Multiset of symmetric-chain lengths (counted in elements) decomposing the
/// lattice L(m,n). Every length L satisfies L = m*n + 1 (mod 2), and the
/// lengths sum to binomial(m+n, m).
struct ChainSpec {
  int m = 0;
  int n = 0;
  std::map<int, int> lengths;  // length -> multiplicity

  int total_elements() const;
  bool contains_length(int len) const { return lengths.count(len) > 0; }

  /// Sorted "length x multiplicity" list, e.g. "4, 6, 10".
  std::string to_string() const;
};

/// Symmetric chain decomposition lengths of L(3,n), obtained by peeling the
/// lattice into shells and decomposing each shell into the three classical
/// chain families.
ChainSpec lindstrom_lengths(int n);

/// Symmetric chain decomposition lengths of L(4,n): shells by parity, each
/// shell split into the two classical chain families.
ChainSpec west_lengths(int n);

/// A symmetric chain of L elements in L(m,n) contributes the centered row
/// q^((mn-L+1)/2) [L]_q. Throws InvalidInput on a parity violation or a
/// negative offset.
Poly poly_from_chains(const ChainSpec& spec);

/// Result of checking the printed coefficient pattern of a Gaussian binomial
/// with 3 or 4 rows against the exact polynomial.
struct LemmaReport {
  int m = 0;
  int n = 0;
  bool pass = false;
  std::string pattern;  // e.g. "almost-trapezoidal top 3", "top type (2,1,2)"
};

/// Checks the exact chain of equalities/strict rises the classification
/// statement asserts for gauss(m,n), m in {3,4}. For m == 4, n in {1,4} is
/// excluded and throws ExcludedCase.
LemmaReport verify_shape_lemma(int m, int n);

}  // namespace qpluck
