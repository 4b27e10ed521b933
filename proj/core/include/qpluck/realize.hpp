#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpluck/poly.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

/// A product/quotient of q-integers, stored as multisets of indices >= 2
/// (index -> multiplicity). [1]_q = 1 is never stored. In reduced form the
/// numerator and denominator share no index.
struct QFraction {
  std::map<int, int> num;
  std::map<int, int> den;

  /// Accumulates [m+n]_q!/([m]_q![n]_q!) per factor, without reducing.
  static QFraction from_binomials(const std::vector<std::pair<int, int>>& factors);

  /// Accumulates the multinomial weight of every vertex of the tree and
  /// reduces; expanding the result reproduces the plucking polynomial.
  static QFraction from_tree(const PlaneTree& t);

  /// Cancels common indices with multiplicity. The reduced form is unique.
  QFraction reduced() const;

  bool numerator_squarefree() const;

  /// Smallest repeated index in the numerator, if any.
  std::optional<int> repeated_numerator_index() const;

  /// Evaluates the fraction as a polynomial (exact division).
  Poly expand() const;

  /// "num: a1,a2,... / den: b1,b2,..." with indices sorted descending.
  std::string to_string() const;

  bool operator==(const QFraction&) const = default;
};

/// Realizability criterion: true iff the reduced-form numerator of the
/// product has no repeated q-integer index. Factors with min(m,n) == 0 are
/// discarded first; throws InvalidInput when nothing remains.
bool is_realizable(const std::vector<std::pair<int, int>>& factors);

/// The repeated numerator index that blocks realization, when there is one.
std::optional<int> realizability_witness(const std::vector<std::pair<int, int>>& factors);

/// Constructs a rooted tree whose plucking polynomial is the product of the
/// given Gaussian binomials. Throws NotRealizable (with witness) when the
/// criterion fails. The result is verified internally against the expanded
/// product before returning.
PlaneTree realize_product(const std::vector<std::pair<int, int>>& factors);

/// Realizes a product of q-integers [a_1]_q ... [a_k]_q for a strictly
/// increasing index list (each >= 2); throws NotRealizable on a repeat.
PlaneTree realize_qints(const std::vector<int>& indices);

/// Exhaustive search for reduced rooted trees with plucking polynomial equal
/// to `target`, up to max_edges. The candidate edge counts and branching
/// numbers are pinned by invariants of the plucking polynomial, which keeps
/// the search desk-scale; within those constraints the scan is complete.
/// Results are canonical and sorted by encoding.
std::vector<PlaneTree> count_realizations(const Poly& target, int max_edges);

}  // namespace qpluck
