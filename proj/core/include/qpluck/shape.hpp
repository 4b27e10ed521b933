#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpluck/poly.hpp"

namespace qpluck {

/// Row decomposition of a symmetric positive unimodal polynomial of degree N:
/// p = sum_i rows[i] * q^i [N+1-2i]_q with rows[0] = c_0 and
/// rows[i] = c_i - c_{i-1}. The support of `rows` is the polynomial's shape.
struct ShapeProfile {
  int N = 0;
  std::vector<Coeff> rows;  // indices 0 .. floor(N/2)

  bool row_nonzero(int i) const {
    return i >= 0 && i < static_cast<int>(rows.size()) && rows[static_cast<size_t>(i)] != 0;
  }
};

/// Full classification record of a symmetric positive unimodal polynomial.
struct ShapeClass {
  int N = 0;         // degree
  int j = 0;         // least index attaining the maximum coefficient
  int top_len = 0;   // N - 2j, the plateau length in degrees
  bool strict_below = false;         // c_0 < c_1 < ... < c_j
  bool almost_strict_below = false;  // c_1 < ... < c_j
  std::vector<std::pair<Coeff, int>> rle;  // run-length encoding (value, count)

  bool trapezoidal = false;         // strict_below with a flat top
  bool almost_trapezoidal = false;  // almost_strict_below with a flat top
  bool strictly_unimodal = false;   // strict_below and top_len <= 1

  /// Run lengths of the peak plateau and its two flanking plateaus;
  /// empty when the coefficient sequence has fewer than three runs.
  std::optional<std::array<int, 3>> top_type;

  bool almost_strictly_unimodal() const {
    return almost_strict_below && top_len <= 1;
  }
};

/// True iff the coefficient vector is palindromic.
bool is_symmetric(const Poly& p);

/// True iff the coefficients weakly rise then weakly fall, with positive ends.
bool is_unimodal(const Poly& p);

/// Throws NotSymmetric / NotUnimodal when the decomposition does not exist.
ShapeProfile row_decompose(const Poly& p);

/// Rebuilds the polynomial from its row decomposition.
Poly reconstruct(const ShapeProfile& profile);

ShapeClass classify(const Poly& p);

/// Convenience accessor for the three central run lengths.
std::optional<std::array<int, 3>> top_type(const Poly& p);

/// True iff every zero row of `a` is also zero in `b` (b has the smaller or
/// equal shape). Mutual domination = shape equivalence. Throws DegreeMismatch
/// unless a.N == b.N.
bool dominates(const ShapeProfile& a, const ShapeProfile& b);

bool shape_equivalent(const ShapeProfile& a, const ShapeProfile& b);

/// Prediction of the shape of a product of Gaussian binomials, derived from
/// the classification statements only (never from expanding the product).
/// `covered` is false when no enumerated statement applies to the input.
struct ShapePrediction {
  bool covered = false;
  int N = 0;            // degree of the product
  int top_len = 0;      // predicted plateau length
  bool strictly_unimodal = false;
  bool trapezoidal = false;  // predictions are always trapezoidal when covered
  std::string rule;          // which case fired, for diagnostics
};

/// Factors are (m,n) pairs; order inside a pair is irrelevant and factors
/// with min(m,n) == 0 are discarded. Requires at least two nontrivial
/// factors; throws InvalidInput otherwise.
ShapePrediction predict_product_shape(const std::vector<std::pair<int, int>>& factors);

/// The nine (m,n) pairs, m <= n, whose Gaussian binomials fail almost-strict
/// unimodality in the m,n >= 5 range.
const std::vector<std::pair<int, int>>& gaussian_exceptions();

}  // namespace qpluck
