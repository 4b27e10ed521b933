#pragma once

#include <string>
#include <vector>

#include "qpluck/poly.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

/// One catalogued reduced tree. Serialized as a TAB-separated line:
/// canonical encoding, edge count, coefficient CSV.
struct TreeCatalogEntry {
  std::string canonical;
  int edges = 0;
  Poly q;

  bool operator==(const TreeCatalogEntry&) const = default;
};

/// Every reduced rooted tree with 0..max_edges edges together with its
/// plucking polynomial, sorted by (edges, canonical encoding).
std::vector<TreeCatalogEntry> build_catalog(int max_edges);

/// Whole-file atomic write (temp file + rename).
void write_catalog(const std::string& path, const std::vector<TreeCatalogEntry>& entries);

std::vector<TreeCatalogEntry> read_catalog(const std::string& path);

std::string catalog_line(const TreeCatalogEntry& entry);

/// Reduced trees sharing one plucking polynomial, with the reachability
/// verdict under the equal-size subtree exchange move.
struct CollisionGroup {
  int edges = 0;
  Poly q;
  std::vector<std::string> trees;  // canonical encodings, sorted
  bool exchange_connected = false;
};

/// Groups of size >= 2, ordered by (edges, coefficient CSV).
std::vector<CollisionGroup> collision_groups(const std::vector<TreeCatalogEntry>& entries);

}  // namespace qpluck
