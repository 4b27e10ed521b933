#include "qpluck/chains.hpp"

#include <algorithm>

#include "qpluck/qcalc.hpp"
#include "qpluck/shape.hpp"

namespace qpluck {

int ChainSpec::total_elements() const {
  int sum = 0;
  for (const auto& [len, mult] : lengths) sum += len * mult;
  return sum;
}

std::string ChainSpec::to_string() const {
  std::string s;
  for (const auto& [len, mult] : lengths) {
    for (int i = 0; i < mult; ++i) {
      if (!s.empty()) s += ", ";
      s += std::to_string(len);
    }
  }
  return s;
}

ChainSpec lindstrom_lengths(int n) {
  if (n < 1) throw InvalidInput("lattice column bound must be >= 1");
  ChainSpec spec;
  spec.m = 3;
  spec.n = n;
  if (n % 2 == 1) {
    // Shells S(3,s) for odd s: chains of length 3s - 4i + 1, 0 <= i <= (s-1)/2.
    for (int s = 1; s <= n; s += 2)
      for (int i = 0; i <= (s - 1) / 2; ++i) ++spec.lengths[3 * s - 4 * i + 1];
  } else {
    // Shells S(3,s) u T(3,s) for s = n, n-4, ...: one chain of length s+1,
    // then the two staggered families.
    for (int s = n % 4; s <= n; s += 4) {
      ++spec.lengths[s + 1];
      for (int i = 0; i <= s / 2 - 1; ++i) ++spec.lengths[3 * s - 4 * i + 1];
      for (int i = 1; i <= s / 2 - 1; ++i) ++spec.lengths[3 * s - 4 * i - 1];
    }
  }
  return spec;
}

ChainSpec west_lengths(int n) {
  if (n < 1) throw InvalidInput("lattice column bound must be >= 1");
  ChainSpec spec;
  spec.m = 4;
  spec.n = n;
  // Shells S(4,s) with s running over the parity class of n; each shell
  // splits into chains of lengths 4(s-3i-j)+1 and 4(s-3i-j)-5.
  for (int s = n % 2; s <= n; s += 2) {
    for (int i = 0; 3 * i <= s; ++i)
      for (int j = 0; 3 * i + 2 * j <= s; ++j) ++spec.lengths[4 * (s - 3 * i - j) + 1];
    for (int i = 0; 3 * i <= s - 3; ++i)
      for (int j = 0; 3 * i + 2 * j <= s - 3; ++j) ++spec.lengths[4 * (s - 3 * i - j) - 5];
  }
  return spec;
}

Poly poly_from_chains(const ChainSpec& spec) {
  const int mn = spec.m * spec.n;
  Poly sum = Poly::zero();
  for (const auto& [len, mult] : spec.lengths) {
    if ((mn - len + 1) % 2 != 0)
      throw InvalidInput("chain length violates the centering parity");
    const int offset = (mn - len + 1) / 2;
    if (offset < 0) throw InvalidInput("chain longer than the lattice allows");
    Poly row = q_int(len).shifted(offset);
    std::vector<Coeff> scaled(row.coeffs());
    for (auto& x : scaled) x *= mult;
    sum = sum + Poly(std::move(scaled));
  }
  return sum;
}

namespace {

// Expected relation between c_i and c_{i+1} going up to the middle:
// '<' strict rise, '=' equality.
bool check_relations(const Poly& p, const std::vector<char>& rel) {
  const auto& c = p.coeffs();
  for (size_t i = 0; i < rel.size(); ++i) {
    const Coeff& a = c[i];
    const Coeff& b = c[i + 1];
    if (rel[i] == '<' && !(a < b)) return false;
    if (rel[i] == '=' && !(a == b)) return false;
  }
  // Symmetry handles the falling half.
  return is_symmetric(p);
}

}  // namespace

LemmaReport verify_shape_lemma(int m, int n) {
  if (m != 3 && m != 4) throw InvalidInput("shape lemma is stated for 3 or 4 rows");
  if (n < 1) throw InvalidInput("column bound must be >= 1");
  if (m == 4 && (n == 1 || n == 4))
    throw ExcludedCase("the 4-row pattern excludes n = 1 and n = 4");

  LemmaReport rep;
  rep.m = m;
  rep.n = n;
  const Poly p = gauss(m, n);
  const int N = m * n;
  const int mid = (N + 1) / 2;        // relations are checked for i < mid
  std::vector<char> rel(static_cast<size_t>(mid), '<');

  if (m == 3) {
    if (n % 2 == 1) {
      const int k = (n - 1) / 2;
      rel[0] = '=';
      for (int i = 3 * k; i < mid; ++i) rel[static_cast<size_t>(i)] = '=';
      rep.pattern = "almost-trapezoidal top 3";
    } else if (n % 4 == 0) {
      const int k = n / 4;
      rel[0] = '=';
      rel[static_cast<size_t>(6 * k - 2)] = '=';
      rep.pattern = "top type (2,1,2)";
    } else {
      const int k = (n - 2) / 4;
      rel[0] = '=';
      rel[static_cast<size_t>(6 * k)] = '=';
      for (int i = 6 * k + 2; i < mid; ++i) rel[static_cast<size_t>(i)] = '=';
      rep.pattern = "top type (2,3,2)";
    }
  } else {
    rel[0] = '=';
    rel[static_cast<size_t>(2 * n - 2)] = '=';
    rep.pattern = "top type (2,1,2)";
  }

  rep.pass = check_relations(p, rel);
  return rep;
}

}  // namespace qpluck
