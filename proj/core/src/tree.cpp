#include "qpluck/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "qpluck/qcalc.hpp"

namespace qpluck {

int PlaneTree::node_count() const {
  int n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

PlaneTree parse_node(std::string_view text, size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != '(')
    throw InvalidInput("expected '(' in tree encoding");
  ++pos;
  PlaneTree node;
  for (;;) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw InvalidInput("unbalanced tree encoding");
    if (text[pos] == ')') {
      ++pos;
      return node;
    }
    node.children.push_back(parse_node(text, pos));
  }
}

}  // namespace

PlaneTree parse_tree(std::string_view text) {
  size_t pos = 0;
  PlaneTree t = parse_node(text, pos);
  while (pos < text.size()) {
    if (!std::isspace(static_cast<unsigned char>(text[pos])))
      throw InvalidInput("trailing characters after tree encoding");
    ++pos;
  }
  return t;
}

std::string encode(const PlaneTree& t) {
  std::string s = "(";
  for (const auto& c : t.children) s += encode(c);
  s += ')';
  return s;
}

const PlaneTree& subtree_at(const PlaneTree& t, const VertexPath& v) {
  const PlaneTree* node = &t;
  for (int idx : v) {
    if (idx < 0 || idx >= static_cast<int>(node->children.size()))
      throw InvalidInput("vertex path out of range");
    node = &node->children[static_cast<size_t>(idx)];
  }
  return *node;
}

namespace {

void collect_vertices(const PlaneTree& t, VertexPath& cur, std::vector<VertexPath>& out) {
  out.push_back(cur);
  for (size_t i = 0; i < t.children.size(); ++i) {
    cur.push_back(static_cast<int>(i));
    collect_vertices(t.children[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<VertexPath> vertices(const PlaneTree& t) {
  std::vector<VertexPath> out;
  VertexPath cur;
  collect_vertices(t, cur, out);
  return out;
}

std::vector<VertexPath> leaves(const PlaneTree& t) {
  std::vector<VertexPath> out;
  for (auto& v : vertices(t)) {
    if (!v.empty() && subtree_at(t, v).children.empty()) out.push_back(std::move(v));
  }
  return out;
}

int r_weight(const PlaneTree& t, const VertexPath& v) {
  if (v.empty()) throw InvalidInput("the root is not a leaf");
  const PlaneTree* node = &t;
  int weight = 0;
  for (int idx : v) {
    if (idx < 0 || idx >= static_cast<int>(node->children.size()))
      throw InvalidInput("vertex path out of range");
    for (size_t s = static_cast<size_t>(idx) + 1; s < node->children.size(); ++s)
      weight += node->children[s].edge_count() + 1;
    node = &node->children[static_cast<size_t>(idx)];
  }
  if (!node->children.empty()) throw InvalidInput("vertex is not a leaf");
  return weight;
}

namespace {

PlaneTree remove_leaf(const PlaneTree& t, const VertexPath& v) {
  PlaneTree copy = t;
  PlaneTree* node = &copy;
  for (size_t d = 0; d + 1 < v.size(); ++d)
    node = &node->children[static_cast<size_t>(v[d])];
  node->children.erase(node->children.begin() + v.back());
  return copy;
}

std::mutex pluck_mutex;
std::unordered_map<std::string, Poly>& pluck_memo() {
  static std::unordered_map<std::string, Poly> memo;
  return memo;
}

}  // namespace

Poly pluck_recursive(const PlaneTree& t) {
  if (t.children.empty()) return Poly::one();
  const std::string key = canonical(t);
  {
    std::lock_guard<std::mutex> lock(pluck_mutex);
    auto it = pluck_memo().find(key);
    if (it != pluck_memo().end()) return it->second;
  }
  Poly sum = Poly::zero();
  for (const auto& v : leaves(t)) {
    const int r = r_weight(t, v);
    sum = sum + pluck_recursive(remove_leaf(t, v)).shifted(r);
  }
  std::lock_guard<std::mutex> lock(pluck_mutex);
  return pluck_memo().emplace(key, std::move(sum)).first->second;
}

Poly pluck_product(const PlaneTree& t) {
  Poly prod = Poly::one();
  if (t.children.size() >= 2) {
    std::vector<int> parts;
    parts.reserve(t.children.size());
    for (const auto& c : t.children) parts.push_back(c.edge_count() + 1);
    prod = q_multinomial(parts);
  }
  for (const auto& c : t.children) prod = prod * pluck_product(c);
  return prod;
}

int branching_number(const PlaneTree& t) {
  if (t.children.empty()) throw InvalidInput("branching number needs at least one edge");
  int sum = 0;
  for (const auto& v : vertices(t)) {
    const auto& node = subtree_at(t, v);
    if (!node.children.empty()) sum += static_cast<int>(node.children.size()) - 1;
  }
  return sum;
}

PlaneTree wedge(const std::vector<PlaneTree>& parts) {
  if (parts.empty()) throw InvalidInput("wedge of empty list");
  PlaneTree root;
  for (const auto& p : parts)
    root.children.insert(root.children.end(), p.children.begin(), p.children.end());
  return root;
}

PlaneTree reduce_string(const PlaneTree& t) {
  const PlaneTree* node = &t;
  while (node->children.size() == 1) node = &node->children.front();
  return *node;
}

bool is_reduced(const PlaneTree& t) { return t.children.size() != 1; }

std::string canonical(const PlaneTree& t) {
  std::vector<std::string> enc;
  enc.reserve(t.children.size());
  for (const auto& c : t.children) enc.push_back(canonical(c));
  std::sort(enc.begin(), enc.end());
  std::string s = "(";
  for (const auto& e : enc) s += e;
  s += ')';
  return s;
}

PlaneTree canonical_form(const PlaneTree& t) {
  PlaneTree out;
  std::vector<std::pair<std::string, PlaneTree>> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) {
    PlaneTree k = canonical_form(c);
    kids.emplace_back(encode(k), std::move(k));
  }
  std::sort(kids.begin(), kids.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [enc, k] : kids) out.children.push_back(std::move(k));
  return out;
}

namespace {

bool is_prefix(const VertexPath& a, const VertexPath& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

PlaneTree exchange_move(const PlaneTree& t, const VertexPath& u1, const VertexPath& u2) {
  if (u1.empty() || u2.empty()) throw InvalidInput("cannot exchange the root");
  if (u1 == u2) throw InvalidInput("exchange positions must be distinct");
  if (is_prefix(u1, u2) || is_prefix(u2, u1))
    throw InvalidInput("exchange positions must not be nested");
  if (subtree_at(t, u1).edge_count() != subtree_at(t, u2).edge_count())
    throw InvalidInput("exchange needs subtrees of equal edge count");

  PlaneTree copy = t;
  auto locate = [&copy](const VertexPath& v) -> PlaneTree& {
    PlaneTree* node = &copy;
    for (int idx : v) node = &node->children[static_cast<size_t>(idx)];
    return *node;
  };
  std::swap(locate(u1), locate(u2));
  return copy;
}

std::vector<std::pair<VertexPath, VertexPath>> exchange_sites(const PlaneTree& t) {
  std::vector<std::pair<VertexPath, VertexPath>> sites;
  const auto vs = vertices(t);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].empty()) continue;
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[j].empty()) continue;
      if (is_prefix(vs[i], vs[j]) || is_prefix(vs[j], vs[i])) continue;
      if (subtree_at(t, vs[i]).edge_count() != subtree_at(t, vs[j]).edge_count()) continue;
      sites.emplace_back(vs[i], vs[j]);
    }
  }
  return sites;
}

int enumeration_budget() {
  if (const char* env = std::getenv("QPLUCK_MAX_EDGES")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

}  // namespace qpluck
