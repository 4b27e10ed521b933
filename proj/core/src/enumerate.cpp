#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "qpluck/tree.hpp"

namespace qpluck {

namespace {

// ---- canonical enumeration by node count -----------------------------------
//
// levels[n-1] holds the canonical encodings of every unordered rooted tree
// with n nodes. A tree is a root plus a multiset of child subtrees; multisets
// are produced as non-decreasing (size, index) sequences, so each tree comes
// out exactly once.

std::mutex levels_mutex;

std::deque<std::vector<std::string>>& levels() {
  static std::deque<std::vector<std::string>> lv{{"()"}};
  return lv;
}

using Sink = std::function<void(std::string&&)>;

void gen_children(const std::vector<const std::vector<std::string>*>& pool,
                  int remaining, int min_size, size_t min_idx,
                  std::vector<const std::string*>& acc, const Sink& sink) {
  if (remaining == 0) {
    std::vector<std::string> enc;
    enc.reserve(acc.size());
    for (const auto* p : acc) enc.push_back(*p);
    std::sort(enc.begin(), enc.end());
    std::string s = "(";
    for (const auto& e : enc) s += e;
    s += ')';
    sink(std::move(s));
    return;
  }
  for (int size = min_size; size <= remaining; ++size) {
    const auto& lvl = *pool[static_cast<size_t>(size - 1)];
    for (size_t i = (size == min_size ? min_idx : 0); i < lvl.size(); ++i) {
      acc.push_back(&lvl[i]);
      gen_children(pool, remaining - size, size, i, acc, sink);
      acc.pop_back();
    }
  }
}

// Ensures levels for 1..max_nodes exist; returns stable pointers to them.
std::vector<const std::vector<std::string>*> snapshot_levels(int max_nodes) {
  std::lock_guard<std::mutex> lock(levels_mutex);
  auto& lv = levels();
  while (static_cast<int>(lv.size()) < max_nodes) {
    const int n = static_cast<int>(lv.size()) + 1;
    std::vector<const std::vector<std::string>*> pool;
    for (int s = 1; s < n; ++s) pool.push_back(&lv[static_cast<size_t>(s - 1)]);
    std::vector<std::string> out;
    std::vector<const std::string*> acc;
    gen_children(pool, n - 1, 1, 0, acc,
                 [&out](std::string&& s) { out.push_back(std::move(s)); });
    lv.push_back(std::move(out));
  }
  std::vector<const std::vector<std::string>*> snap;
  snap.reserve(static_cast<size_t>(max_nodes));
  for (int s = 1; s <= max_nodes; ++s) snap.push_back(&lv[static_cast<size_t>(s - 1)]);
  return snap;
}

}  // namespace

void for_each_rooted_tree(int edges, const std::function<void(const PlaneTree&)>& fn) {
  if (edges < 0) throw InvalidInput("negative edge count");
  if (edges > enumeration_budget())
    throw BudgetExceeded("tree enumeration beyond the edge budget");
  if (edges == 0) {
    fn(PlaneTree{});
    return;
  }
  const auto pool = snapshot_levels(edges);  // children have at most `edges` nodes
  std::vector<const std::string*> acc;
  gen_children(pool, edges, 1, 0, acc,
               [&fn](std::string&& s) { fn(parse_tree(s)); });
}

std::vector<PlaneTree> enumerate_rooted_trees(int edges) {
  std::vector<PlaneTree> out;
  for_each_rooted_tree(edges, [&out](const PlaneTree& t) { out.push_back(t); });
  return out;
}

namespace {

std::vector<std::vector<PlaneTree>> plane_trees_up_to(int edges) {
  std::vector<std::vector<PlaneTree>> memo(static_cast<size_t>(edges) + 1);
  memo[0] = {PlaneTree{}};
  for (int e = 1; e <= edges; ++e) {
    // Split off the first child: e1 edges below it, the rest keeps e-1-e1.
    for (int e1 = 0; e1 < e; ++e1) {
      for (const auto& first : memo[static_cast<size_t>(e1)]) {
        for (const auto& rest : memo[static_cast<size_t>(e - 1 - e1)]) {
          PlaneTree t = rest;
          t.children.insert(t.children.begin(), first);
          memo[static_cast<size_t>(e)].push_back(std::move(t));
        }
      }
    }
  }
  return memo;
}

}  // namespace

void for_each_plane_tree(int edges, const std::function<void(const PlaneTree&)>& fn) {
  if (edges < 0) throw InvalidInput("negative edge count");
  if (edges > 14) throw BudgetExceeded("plane tree enumeration beyond budget");
  const auto memo = plane_trees_up_to(edges);
  for (const auto& t : memo[static_cast<size_t>(edges)]) fn(t);
}

namespace {

// ---- enumeration restricted by branching number -----------------------------
//
// pool(nodes, excess) = canonical trees with the given node count whose
// branching number is exactly `excess`. Kept tiny by the excess bound; this
// is what makes realization searches at 20+ edges practical.

struct ExcessKey {
  int nodes;
  int excess;
  auto operator<=>(const ExcessKey&) const = default;
};

std::mutex pools_mutex;

int max_excess(int nodes) { return nodes >= 2 ? nodes - 2 : 0; }

using PoolMap = std::map<ExcessKey, std::vector<std::string>>;

PoolMap& pools() {
  static PoolMap p;
  return p;
}

const std::vector<std::string>& pool_locked(int nodes, int excess);

// Children as a non-decreasing (size, excess, index) sequence.
void gen_children_excess(int slots, int node_budget, int excess_budget,
                         int min_size, int min_x, size_t min_idx,
                         std::vector<const std::string*>& acc,
                         std::vector<std::string>& out) {
  if (slots == 0) {
    if (node_budget != 0 || excess_budget != 0) return;
    std::vector<std::string> enc;
    enc.reserve(acc.size());
    for (const auto* p : acc) enc.push_back(*p);
    std::sort(enc.begin(), enc.end());
    std::string s = "(";
    for (const auto& e : enc) s += e;
    s += ')';
    out.push_back(std::move(s));
    return;
  }
  for (int size = min_size; size <= node_budget - (slots - 1); ++size) {
    const int x_lo = (size == min_size) ? min_x : 0;
    const int x_hi = std::min(excess_budget, max_excess(size));
    for (int x = x_lo; x <= x_hi; ++x) {
      const auto& candidates = pool_locked(size, x);
      for (size_t i = (size == min_size && x == min_x ? min_idx : 0);
           i < candidates.size(); ++i) {
        acc.push_back(&candidates[i]);
        gen_children_excess(slots - 1, node_budget - size, excess_budget - x,
                            size, x, i, acc, out);
        acc.pop_back();
      }
    }
  }
}

const std::vector<std::string>& pool_locked(int nodes, int excess) {
  static const std::vector<std::string> empty;
  if (excess < 0 || excess > max_excess(nodes)) return empty;
  const ExcessKey key{nodes, excess};
  auto it = pools().find(key);
  if (it != pools().end()) return it->second;

  std::vector<std::string> out;
  if (nodes == 1) {
    out.push_back("()");
  } else {
    for (int k = 1; k <= nodes - 1; ++k) {
      const int xt = excess - (k - 1);
      if (xt < 0) break;
      std::vector<const std::string*> acc;
      gen_children_excess(k, nodes - 1, xt, 1, 0, 0, acc, out);
    }
  }
  return pools().emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<PlaneTree> enumerate_reduced_trees_with_branching(int edges, int branching) {
  if (edges < 0) throw InvalidInput("negative edge count");
  if (edges > 24) throw BudgetExceeded("constrained enumeration beyond budget");
  if (edges == 0)
    return branching == 0 ? std::vector<PlaneTree>{PlaneTree{}} : std::vector<PlaneTree>{};
  if (branching < 1 || branching > edges - 1) return {};

  std::vector<std::string> encodings;
  {
    std::lock_guard<std::mutex> lock(pools_mutex);
    for (int k = 2; k <= edges; ++k) {
      const int xt = branching - (k - 1);
      if (xt < 0) break;
      std::vector<const std::string*> acc;
      gen_children_excess(k, edges, xt, 1, 0, 0, acc, encodings);
    }
  }
  std::vector<PlaneTree> out;
  out.reserve(encodings.size());
  for (const auto& e : encodings) out.push_back(parse_tree(e));
  return out;
}

}  // namespace qpluck
