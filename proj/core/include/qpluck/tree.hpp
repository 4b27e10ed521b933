#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qpluck/poly.hpp"

namespace qpluck {

/// Ordered rooted tree. Children are kept in plane (left to right) order;
/// the node itself is the root of its subtree.
///
/// Text encoding: a node is "(" + concatenation of child encodings + ")",
/// so a leaf is "()". Whitespace between tokens is ignored on input.
struct PlaneTree {
  std::vector<PlaneTree> children;

  int node_count() const;
  int edge_count() const { return node_count() - 1; }

  bool operator==(const PlaneTree&) const = default;
};

/// Address of a vertex: the child indices along the path from the root.
/// The empty path is the root itself.
using VertexPath = std::vector<int>;

PlaneTree parse_tree(std::string_view text);
std::string encode(const PlaneTree& t);

/// Vertex at the given path; throws InvalidInput when out of range.
const PlaneTree& subtree_at(const PlaneTree& t, const VertexPath& v);

/// All vertices in preorder (root first, children left to right).
std::vector<VertexPath> vertices(const PlaneTree& t);

/// Leaves of the tree in left-to-right order: childless vertices other than
/// the root. The root is excluded even when it has degree one.
std::vector<VertexPath> leaves(const PlaneTree& t);

/// Number of edges strictly to the right of the path from the root to the
/// leaf v. Throws InvalidInput when v is not a leaf.
int r_weight(const PlaneTree& t, const VertexPath& v);

/// Plucking polynomial by direct recursion over leaf removals, memoized on
/// the canonical encoding. The memo is internally synchronized.
Poly pluck_recursive(const PlaneTree& t);

/// Plucking polynomial as the product over vertices of the q-multinomial of
/// child branch sizes (each child contributes its subtree edge count plus
/// the connecting edge).
Poly pluck_product(const PlaneTree& t);

/// Sum over vertices of (child count - 1), counting vertices with children.
/// Equals the coefficient of q in the plucking polynomial. Throws
/// InvalidInput on the single-vertex tree.
int branching_number(const PlaneTree& t);

/// Glues the parts at a common root: the child list is the concatenation of
/// the parts' child lists in the given order.
PlaneTree wedge(const std::vector<PlaneTree>& parts);

/// Removes the string below the first branching: deletes the root while it
/// has exactly one child. Plucking polynomial is unchanged.
PlaneTree reduce_string(const PlaneTree& t);

/// A tree is reduced when its root degree differs from one.
bool is_reduced(const PlaneTree& t);

/// Encoding invariant under reordering of children at every vertex; equal
/// exactly for trees isomorphic as unordered rooted trees.
std::string canonical(const PlaneTree& t);

/// The plane representative realizing the canonical encoding.
PlaneTree canonical_form(const PlaneTree& t);

/// Swaps the subtrees rooted at u1 and u2. Requires distinct non-root
/// vertices, neither an ancestor of the other, with subtrees of equal edge
/// count; throws InvalidInput otherwise. Preserves the plucking polynomial.
PlaneTree exchange_move(const PlaneTree& t, const VertexPath& u1, const VertexPath& u2);

/// All legal exchange-move position pairs on t.
std::vector<std::pair<VertexPath, VertexPath>> exchange_sites(const PlaneTree& t);

/// Enumeration budget in edges: QPLUCK_MAX_EDGES when set, otherwise 16.
int enumeration_budget();

/// Streams every unordered rooted tree with exactly `edges` edges, once, in
/// canonical form and deterministic order. Throws BudgetExceeded beyond the
/// budget.
void for_each_rooted_tree(int edges, const std::function<void(const PlaneTree&)>& fn);

/// Convenience vector form of for_each_rooted_tree.
std::vector<PlaneTree> enumerate_rooted_trees(int edges);

/// Streams every plane (ordered) rooted tree with exactly `edges` edges.
void for_each_plane_tree(int edges, const std::function<void(const PlaneTree&)>& fn);

/// Every reduced unordered rooted tree with the given edge count whose
/// branching number (sum over vertices of child count minus one) is exactly
/// `branching`. Used to keep realization searches desk-scale.
std::vector<PlaneTree> enumerate_reduced_trees_with_branching(int edges, int branching);

}  // namespace qpluck
