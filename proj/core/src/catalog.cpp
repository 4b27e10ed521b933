#include "qpluck/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace qpluck {

std::vector<TreeCatalogEntry> build_catalog(int max_edges) {
  if (max_edges < 0) throw InvalidInput("negative edge count");
  if (max_edges > enumeration_budget())
    throw BudgetExceeded("catalog beyond the edge budget");
  std::vector<TreeCatalogEntry> out;
  for (int e = 0; e <= max_edges; ++e) {
    for_each_rooted_tree(e, [&out, e](const PlaneTree& t) {
      if (!is_reduced(t)) return;
      out.push_back(TreeCatalogEntry{encode(t), e, pluck_product(t)});
    });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.edges != b.edges) return a.edges < b.edges;
    return a.canonical < b.canonical;
  });
  return out;
}

std::string catalog_line(const TreeCatalogEntry& entry) {
  return entry.canonical + "\t" + std::to_string(entry.edges) + "\t" + entry.q.to_csv();
}

void write_catalog(const std::string& path, const std::vector<TreeCatalogEntry>& entries) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    for (const auto& e : entries) out << catalog_line(e) << '\n';
    if (!out) throw Error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot move catalog into place: " + path);
}

std::vector<TreeCatalogEntry> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog: " + path);
  std::vector<TreeCatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    TreeCatalogEntry e;
    std::string edges, csv;
    if (!std::getline(row, e.canonical, '\t') || !std::getline(row, edges, '\t') ||
        !std::getline(row, csv))
      throw InvalidInput("malformed catalog line: " + line);
    e.edges = std::stoi(edges);
    e.q = Poly::from_csv(csv);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

bool group_connected(const std::vector<std::string>& trees) {
  std::map<std::string, bool> visited;
  for (const auto& t : trees) visited[t] = false;
  std::queue<std::string> frontier;
  frontier.push(trees.front());
  visited[trees.front()] = true;
  size_t reached = 1;
  while (!frontier.empty()) {
    const PlaneTree t = parse_tree(frontier.front());
    frontier.pop();
    for (const auto& [u1, u2] : exchange_sites(t)) {
      const std::string next = canonical(exchange_move(t, u1, u2));
      auto it = visited.find(next);
      if (it != visited.end() && !it->second) {
        it->second = true;
        ++reached;
        frontier.push(next);
      }
    }
  }
  return reached == trees.size();
}

}  // namespace

std::vector<CollisionGroup> collision_groups(const std::vector<TreeCatalogEntry>& entries) {
  std::map<std::pair<int, std::string>, CollisionGroup> by_poly;
  for (const auto& e : entries) {
    auto& g = by_poly[{e.edges, e.q.to_csv()}];
    if (g.trees.empty()) {
      g.edges = e.edges;
      g.q = e.q;
    }
    g.trees.push_back(e.canonical);
  }
  std::vector<CollisionGroup> out;
  for (auto& [key, g] : by_poly) {
    if (g.trees.size() < 2) continue;
    std::sort(g.trees.begin(), g.trees.end());
    g.exchange_connected = group_connected(g.trees);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace qpluck
