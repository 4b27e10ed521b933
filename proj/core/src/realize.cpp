#include "qpluck/realize.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

#include "qpluck/qcalc.hpp"
#include "qpluck/shape.hpp"

namespace qpluck {

namespace {

void add_range(std::map<int, int>& ms, int lo, int hi) {
  for (int i = std::max(lo, 2); i <= hi; ++i) ++ms[i];
}

std::vector<std::pair<int, int>> nontrivial(const std::vector<std::pair<int, int>>& factors) {
  std::vector<std::pair<int, int>> fs;
  for (auto [m, n] : factors) {
    if (m < 0 || n < 0) throw InvalidInput("negative binomial parameter");
    if (m > n) std::swap(m, n);
    if (m == 0) continue;
    fs.emplace_back(m, n);
  }
  return fs;
}

}  // namespace

QFraction QFraction::from_binomials(const std::vector<std::pair<int, int>>& factors) {
  QFraction f;
  for (auto [m, n] : factors) {
    if (m < 0 || n < 0) throw InvalidInput("negative binomial parameter");
    add_range(f.num, 2, m + n);
    add_range(f.den, 2, m);
    add_range(f.den, 2, n);
  }
  return f;
}

QFraction QFraction::from_tree(const PlaneTree& t) {
  QFraction f;
  for (const auto& v : vertices(t)) {
    const auto& node = subtree_at(t, v);
    if (node.children.size() < 2) continue;
    int total = 0;
    for (const auto& c : node.children) {
      const int part = c.edge_count() + 1;
      add_range(f.den, 2, part);
      total += part;
    }
    add_range(f.num, 2, total);
  }
  return f.reduced();
}

QFraction QFraction::reduced() const {
  QFraction r;
  auto rest = den;
  for (const auto& [idx, mult] : num) {
    const auto it = rest.find(idx);
    const int cancel = it == rest.end() ? 0 : std::min(mult, it->second);
    if (mult > cancel) r.num[idx] = mult - cancel;
    if (it != rest.end()) {
      it->second -= cancel;
      if (it->second == 0) rest.erase(it);
    }
  }
  r.den = std::move(rest);
  return r;
}

bool QFraction::numerator_squarefree() const {
  return !repeated_numerator_index().has_value();
}

std::optional<int> QFraction::repeated_numerator_index() const {
  for (const auto& [idx, mult] : num) {
    if (mult > 1) return idx;
  }
  return std::nullopt;
}

Poly QFraction::expand() const {
  Poly top = Poly::one();
  for (const auto& [idx, mult] : num)
    for (int i = 0; i < mult; ++i) top = top * q_int(idx);
  Poly bottom = Poly::one();
  for (const auto& [idx, mult] : den)
    for (int i = 0; i < mult; ++i) bottom = bottom * q_int(idx);
  return poly_divexact(top, bottom);
}

std::string QFraction::to_string() const {
  auto side = [](const std::map<int, int>& ms) {
    std::string s;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
      for (int i = 0; i < it->second; ++i) {
        if (!s.empty()) s += ',';
        s += std::to_string(it->first);
      }
    }
    return s;
  };
  return "num: " + side(num) + " / den: " + side(den);
}

std::optional<int> realizability_witness(const std::vector<std::pair<int, int>>& factors) {
  const auto fs = nontrivial(factors);
  if (fs.empty()) throw InvalidInput("no nontrivial binomial factors");
  return QFraction::from_binomials(fs).reduced().repeated_numerator_index();
}

bool is_realizable(const std::vector<std::pair<int, int>>& factors) {
  return !realizability_witness(factors).has_value();
}

namespace {

PlaneTree chain(int edges) {
  PlaneTree t;
  for (int i = 0; i < edges; ++i) {
    PlaneTree up;
    up.children.push_back(std::move(t));
    t = std::move(up);
  }
  return t;
}

// One component consuming `size` edges below its parent. A claimed component
// carries a string down to a new branching vertex for the claiming factor;
// a zero-length string folds the branch into the parent's child list.
struct Builder {
  const std::vector<std::pair<int, int>>& factors;
  const std::map<std::pair<int, int>, size_t>& claims;  // (factor, side) -> claimant

  std::vector<PlaneTree> component(int size, std::pair<int, int> part) const {
    const auto it = claims.find(part);
    if (it == claims.end()) return {chain(size - 1)};

    const auto [m, n] = factors[it->second];
    std::vector<PlaneTree> inner = component(m, {static_cast<int>(it->second), 0});
    std::vector<PlaneTree> right = component(n, {static_cast<int>(it->second), 1});
    inner.insert(inner.end(), right.begin(), right.end());

    const int string_len = size - (m + n);
    if (string_len == 0) return inner;
    PlaneTree branch;
    branch.children = std::move(inner);
    for (int i = 0; i < string_len - 1; ++i) {
      PlaneTree up;
      up.children.push_back(std::move(branch));
      branch = std::move(up);
    }
    return {std::move(branch)};
  }
};

}  // namespace

PlaneTree realize_product(const std::vector<std::pair<int, int>>& factors) {
  auto fs = nontrivial(factors);
  if (fs.empty()) throw InvalidInput("no nontrivial binomial factors");
  if (auto witness = QFraction::from_binomials(fs).reduced().repeated_numerator_index()) {
    throw NotRealizable("numerator repeats the q-integer [" + std::to_string(*witness) + "]",
                        *witness);
  }

  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (a.first + a.second != b.first + b.second)
      return a.first + a.second > b.first + b.second;
    return a > b;
  });

  // Greedy matching: each later factor claims the smallest available part
  // of an earlier factor that can host its total.
  std::map<std::pair<int, int>, size_t> claims;
  std::vector<std::tuple<int, int, int>> pool;  // (size, factor, side), unclaimed
  auto offer = [&pool](int size, int factor, int side) {
    pool.emplace_back(size, factor, side);
    std::sort(pool.begin(), pool.end());
  };
  offer(fs[0].first, 0, 0);
  offer(fs[0].second, 0, 1);
  for (size_t i = 1; i < fs.size(); ++i) {
    const int total = fs[i].first + fs[i].second;
    auto it = std::find_if(pool.begin(), pool.end(), [total](const auto& e) {
      return std::get<0>(e) >= total;
    });
    if (it == pool.end())
      throw Error("greedy matching failed despite square-free numerator");
    claims[{std::get<1>(*it), std::get<2>(*it)}] = i;
    pool.erase(it);
    offer(fs[i].first, static_cast<int>(i), 0);
    offer(fs[i].second, static_cast<int>(i), 1);
  }

  const Builder builder{fs, claims};
  PlaneTree root;
  auto left = builder.component(fs[0].first, {0, 0});
  auto right = builder.component(fs[0].second, {0, 1});
  root.children = std::move(left);
  root.children.insert(root.children.end(), right.begin(), right.end());

  Poly expected = Poly::one();
  for (auto [m, n] : fs) expected = expected * gauss(m, n);
  if (pluck_product(root) != expected)
    throw Error("realized tree does not reproduce the product");
  return root;
}

PlaneTree realize_qints(const std::vector<int>& indices) {
  if (indices.empty()) throw InvalidInput("empty q-integer list");
  for (int a : indices) {
    if (a < 2) throw InvalidInput("q-integer index must be >= 2");
  }
  for (size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1])
      throw NotRealizable("q-integer [" + std::to_string(indices[i]) + "] repeats or decreases",
                          indices[i]);
  }

  // Start from the one-branching tree realizing [a_1]_q, then alternately
  // grow the string at the root and sprout a fresh edge: a tree with e edges
  // gains the factor [e+1]_q when a leaf is attached to its root.
  PlaneTree t;
  t.children.push_back(chain(0));
  t.children.push_back(chain(indices[0] - 2));
  for (size_t i = 1; i < indices.size(); ++i) {
    const int string_len = indices[i] - indices[i - 1] - 1;
    for (int s = 0; s < string_len; ++s) {
      PlaneTree below;
      below.children.push_back(std::move(t));
      t = std::move(below);
    }
    t.children.push_back(chain(0));
  }

  Poly expected = Poly::one();
  for (int a : indices) expected = expected * q_int(a);
  if (pluck_product(t) != expected)
    throw Error("realized tree does not reproduce the q-integer product");
  return t;
}

namespace {

// Cyclotomic polynomials with small integer coefficients, for the edge-count
// filter: a reduced tree with e >= 2 edges has [e]_q in its reduced
// numerator exactly once, so its plucking polynomial vanishes at a primitive
// e-th root of unity.
std::mutex cyclotomic_mutex;

std::vector<long> cyclotomic_locked(int n) {
  static std::map<int, std::vector<long>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  // x^n - 1 divided by the cyclotomics of the proper divisors.
  std::vector<long> poly(static_cast<size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto div = cyclotomic_locked(d);
    std::vector<long> quot(poly.size() - div.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      const long c = poly[static_cast<size_t>(i) + div.size() - 1];
      quot[static_cast<size_t>(i)] = c;  // divisor is monic
      for (size_t j = 0; j < div.size(); ++j)
        poly[static_cast<size_t>(i) + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return memo.emplace(n, std::move(poly)).first->second;
}

// Degree and q=1 value of the plucking polynomial straight from the tree
// shape, in plain integer arithmetic; cheap filters ahead of the full
// polynomial comparison.
long pluck_degree(const PlaneTree& t) {
  long deg = 0;
  long sq = 0, total = 0;
  for (const auto& c : t.children) {
    const long p = c.edge_count() + 1;
    total += p;
    sq += p * p;
    deg += pluck_degree(c);
  }
  return deg + (total * total - sq) / 2;
}

Coeff pluck_at_one(const PlaneTree& t) {
  Coeff value(1);
  unsigned long total = 0;
  for (const auto& c : t.children) {
    const unsigned long p = static_cast<unsigned long>(c.edge_count()) + 1;
    total += p;
    value *= binomial_exact(total, p);
    value *= pluck_at_one(c);
  }
  return value;
}

bool divisible_by_cyclotomic(const Poly& p, int n) {
  std::vector<long> div;
  {
    std::lock_guard<std::mutex> lock(cyclotomic_mutex);
    div = cyclotomic_locked(n);
  }
  if (p.coeffs().size() < div.size()) return false;
  std::vector<Coeff> rem = p.coeffs();
  for (int i = static_cast<int>(rem.size() - div.size()); i >= 0; --i) {
    const Coeff c = rem[static_cast<size_t>(i) + div.size() - 1];
    if (c == 0) continue;
    for (size_t j = 0; j < div.size(); ++j)
      rem[static_cast<size_t>(i) + j] -= c * static_cast<long>(div[j]);
  }
  return std::all_of(rem.begin(), rem.end(), [](const Coeff& c) { return c == 0; });
}

}  // namespace

std::vector<PlaneTree> count_realizations(const Poly& target, int max_edges) {
  if (max_edges < 0) throw InvalidInput("negative edge bound");
  if (max_edges > 24) throw BudgetExceeded("realization search beyond budget");

  std::vector<PlaneTree> found;
  if (target.is_zero() || target[0] != 1) return found;
  if (target.degree() == 0) {
    found.push_back(PlaneTree{});  // only the single vertex has Q = 1
    return found;
  }
  if (!is_symmetric(target) || !is_unimodal(target)) return found;

  // Branching number equals the coefficient of q.
  const Coeff& c1 = target[1];
  if (c1 < 1 || c1 > max_edges) return found;
  const int branching = static_cast<int>(c1.get_si());
  const int deg = target.degree();

  const Coeff target_at_one = target.eval_one();
  for (int e = 2; e <= max_edges; ++e) {
    if (e - 1 > deg || e * (e - 1) / 2 < deg) continue;
    if (!divisible_by_cyclotomic(target, e)) continue;
    for (const auto& t : enumerate_reduced_trees_with_branching(e, branching)) {
      if (pluck_degree(t) != deg) continue;
      if (pluck_at_one(t) != target_at_one) continue;
      if (pluck_product(t) == target) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end(), [](const PlaneTree& a, const PlaneTree& b) {
    return encode(a) < encode(b);
  });
  return found;
}

}  // namespace qpluck
