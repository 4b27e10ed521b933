#include <algorithm>
#include <numeric>

#include "qpluck/shape.hpp"

namespace qpluck {

namespace {

bool is_exceptional(int m, int n) {
  const auto& nine = gaussian_exceptions();
  return std::find(nine.begin(), nine.end(), std::make_pair(m, n)) != nine.end();
}

ShapePrediction covered(int N, int top, const std::string& rule) {
  ShapePrediction p;
  p.covered = true;
  p.N = N;
  p.top_len = top;
  p.strictly_unimodal = top <= 1;
  p.trapezoidal = true;
  p.rule = rule;
  return p;
}

ShapePrediction strict(int N, const std::string& rule) {
  return covered(N, N % 2, rule);
}

// One q-integer factor [k+1]_q against a single Gaussian binomial (m,n),
// 2 <= m <= n. Case split follows the shape of the binomial's row support.
ShapePrediction one_qint_one_gauss(int k, int m, int n, int N) {
  if (m == 2) {
    if (k >= 2 * n) return covered(N, k - 2 * n, "qint-x-gauss2n");
    if ((2 * n - k) % 4 == 2) return covered(N, 2, "qint-x-gauss2n");
    return strict(N, "qint-x-gauss2n");
  }
  if (m == 3) {
    if (k == 1 && n % 2 == 1) return covered(N, 2, "qint-x-gauss3n");
    if (k == 2 && n % 4 == 0) return covered(N, 2, "qint-x-gauss3n");
    if (k == 4 && n % 4 == 2) return covered(N, 2, "qint-x-gauss3n");
    if (k == 3 * n - 2) return covered(N, 2, "qint-x-gauss3n");
    if (k >= 3 * n + 2) return covered(N, k - 3 * n, "qint-x-gauss3n");
    return strict(N, "qint-x-gauss3n");
  }
  if (m == 4) {
    if (k == 2) return covered(N, 2, "qint-x-gauss4n");
    if (n == 4 && k == 6) return covered(N, 2, "qint-x-gauss4n");
    if (k == 4 * n - 2) return covered(N, 2, "qint-x-gauss4n");
    if (k >= 4 * n + 2) return covered(N, k - 4 * n, "qint-x-gauss4n");
    return strict(N, "qint-x-gauss4n");
  }
  // m >= 5: almost strictly unimodal except for the nine listed pairs, and
  // those are almost trapezoidal with one extra interior gap ((6,6) aside).
  const int d = m * n;
  if (is_exceptional(m, n)) {
    if (m == 6 && n == 6 && k == 2) return covered(N, 2, "qint-x-exceptional");
    if (k == d - 2) return covered(N, 2, "qint-x-exceptional");
    if (k >= d + 2) return covered(N, k - d, "qint-x-exceptional");
    return strict(N, "qint-x-exceptional");
  }
  if (k == d - 2) return covered(N, 2, "qint-x-gauss");
  if (k >= d + 2) return covered(N, k - d, "qint-x-gauss");
  return strict(N, "qint-x-gauss");
}

}  // namespace

ShapePrediction predict_product_shape(const std::vector<std::pair<int, int>>& factors) {
  // Normalize: orient each pair as (min,max), drop trivial factors.
  std::vector<std::pair<int, int>> fs;
  for (auto [m, n] : factors) {
    if (m < 0 || n < 0) throw InvalidInput("negative binomial parameter");
    if (m > n) std::swap(m, n);
    if (m == 0) continue;
    fs.emplace_back(m, n);
  }
  if (fs.size() < 2) throw InvalidInput("need at least two nontrivial factors");

  std::vector<int> qint_degrees;  // factor (1,n) is the q-integer [n+1]_q of degree n
  std::vector<std::pair<int, int>> gs;
  int N = 0;
  for (auto [m, n] : fs) {
    N += m * n;
    if (m == 1)
      qint_degrees.push_back(n);
    else
      gs.emplace_back(m, n);
  }

  // All factors are q-integers.
  if (gs.empty()) {
    std::sort(qint_degrees.begin(), qint_degrees.end());
    const int largest = qint_degrees.back();
    const int rest = N - largest;
    const int excess = largest - rest;
    return covered(N, std::max(excess, N % 2), "qint-product");
  }

  // No q-integer factors.
  if (qint_degrees.empty()) {
    if (gs.size() == 2) {
      auto [a, b] = std::minmax(gs[0], gs[1]);
      if (a == std::make_pair(2, 3) && b == std::make_pair(4, 4))
        return covered(N, 2, "gauss44-x-gauss23");
      if (a == std::make_pair(2, 2) && b.first == 3 && b.second % 4 == 2 && b.second >= 6)
        return covered(N, 2, "gauss3n-x-gauss22");
      if (a.first == 2 && b.first == 2) {
        if ((a.second + b.second) % 2 != 0)
          return covered(N, 2, "gauss2n-parity");
        return strict(N, "gauss2n-parity");
      }
    }
    return strict(N, "no-qint-product");
  }

  // Exactly one q-integer factor.
  if (qint_degrees.size() == 1) {
    const int k = qint_degrees.front();
    if (gs.size() == 1)
      return one_qint_one_gauss(k, gs[0].first, gs[0].second, N);
    const int deg_rest = N - k;
    if (k >= deg_rest + 2) return covered(N, k - deg_rest, "qint-dominates");
    return strict(N, "one-qint-product");
  }

  // Several q-integers mixed with Gaussian binomials: only the dominant
  // q-integer can flatten the top.
  const int largest = *std::max_element(qint_degrees.begin(), qint_degrees.end());
  const int deg_rest = N - largest;
  if (largest >= deg_rest + 2) return covered(N, largest - deg_rest, "qint-dominates");
  return strict(N, "mixed-product");
}

}  // namespace qpluck
