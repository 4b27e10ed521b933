#include "qpluck/shape.hpp"

#include <algorithm>

#include "qpluck/qcalc.hpp"

namespace qpluck {

bool is_symmetric(const Poly& p) {
  const auto& c = p.coeffs();
  const size_t n = c.size();
  for (size_t i = 0; i < n / 2; ++i) {
    if (c[i] != c[n - 1 - i]) return false;
  }
  return true;
}

bool is_unimodal(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.front() == 0 || c.back() == 0) return false;
  size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i == c.size();
}

ShapeProfile row_decompose(const Poly& p) {
  if (!is_symmetric(p)) throw NotSymmetric("row decomposition needs a palindromic polynomial");
  if (p.is_zero() || p.coeffs().front() <= 0)
    throw NotUnimodal("row decomposition needs a positive polynomial");
  const int N = p.degree();
  ShapeProfile prof;
  prof.N = N;
  prof.rows.reserve(static_cast<size_t>(N / 2) + 1);
  prof.rows.push_back(p[0]);
  for (int i = 1; i <= N / 2; ++i) {
    Coeff b = p[i] - p[i - 1];
    if (b < 0) throw NotUnimodal("coefficients decrease below the middle");
    prof.rows.push_back(std::move(b));
  }
  return prof;
}

Poly reconstruct(const ShapeProfile& profile) {
  Poly sum = Poly::zero();
  for (size_t i = 0; i < profile.rows.size(); ++i) {
    if (profile.rows[i] == 0) continue;
    const int len = profile.N + 1 - 2 * static_cast<int>(i);
    Poly row = q_int(len).shifted(static_cast<int>(i));
    std::vector<Coeff> scaled(row.coeffs());
    for (auto& x : scaled) x *= profile.rows[i];
    sum = sum + Poly(std::move(scaled));
  }
  return sum;
}

ShapeClass classify(const Poly& p) {
  if (!is_symmetric(p)) throw NotSymmetric("classify needs a palindromic polynomial");
  if (!is_unimodal(p)) throw NotUnimodal("classify needs a unimodal polynomial");

  const auto& c = p.coeffs();
  ShapeClass sc;
  sc.N = p.degree();

  const Coeff peak = *std::max_element(c.begin(), c.end());
  sc.j = static_cast<int>(std::find(c.begin(), c.end(), peak) - c.begin());
  sc.top_len = sc.N - 2 * sc.j;

  sc.strict_below = true;
  for (int i = 1; i <= sc.j; ++i) {
    if (!(c[static_cast<size_t>(i - 1)] < c[static_cast<size_t>(i)])) {
      sc.strict_below = false;
      break;
    }
  }
  sc.almost_strict_below = true;
  for (int i = 2; i <= sc.j; ++i) {
    if (!(c[static_cast<size_t>(i - 1)] < c[static_cast<size_t>(i)])) {
      sc.almost_strict_below = false;
      break;
    }
  }

  for (const auto& x : c) {
    if (!sc.rle.empty() && sc.rle.back().first == x)
      ++sc.rle.back().second;
    else
      sc.rle.emplace_back(x, 1);
  }

  // For a symmetric unimodal sequence the maximum plateau runs from j to N-j,
  // so the flat-top condition is automatic and the variants reduce to the
  // strictness flags.
  sc.trapezoidal = sc.strict_below;
  sc.almost_trapezoidal = sc.almost_strict_below;
  sc.strictly_unimodal = sc.strict_below && sc.top_len <= 1;

  size_t peak_run = 0;
  int pos = 0;
  for (size_t r = 0; r < sc.rle.size(); ++r) {
    if (pos <= sc.j && sc.j < pos + sc.rle[r].second) peak_run = r;
    pos += sc.rle[r].second;
  }
  if (peak_run > 0 && peak_run + 1 < sc.rle.size()) {
    sc.top_type = std::array<int, 3>{sc.rle[peak_run - 1].second,
                                     sc.rle[peak_run].second,
                                     sc.rle[peak_run + 1].second};
  }
  return sc;
}

std::optional<std::array<int, 3>> top_type(const Poly& p) {
  return classify(p).top_type;
}

bool dominates(const ShapeProfile& a, const ShapeProfile& b) {
  if (a.N != b.N) throw DegreeMismatch("shape comparison needs equal degrees");
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i] == 0 && b.row_nonzero(static_cast<int>(i))) return false;
  }
  return true;
}

bool shape_equivalent(const ShapeProfile& a, const ShapeProfile& b) {
  return dominates(a, b) && dominates(b, a);
}

const std::vector<std::pair<int, int>>& gaussian_exceptions() {
  static const std::vector<std::pair<int, int>> nine = {
      {5, 6}, {5, 10}, {5, 14}, {6, 6}, {6, 7},
      {6, 9}, {6, 11}, {6, 13}, {7, 10}};
  return nine;
}

}  // namespace qpluck
