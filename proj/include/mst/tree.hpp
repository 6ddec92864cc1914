#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mst {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class TreeErrorKind {
  Syntax,
  BadOrder,
  BadVertexId,
  SelfLoop,
  DuplicateEdge,
  EdgeCount,
  Cyclic,
  Disconnected,
  NotAnEdge,
  NotInternal,
  BadFamily,
};

std::string_view to_string(TreeErrorKind kind);

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  TreeErrorKind kind() const { return kind_; }

 private:
  TreeErrorKind kind_;
};

/// Labeled undirected tree on vertices 0..n-1. Immutable once built; every
/// constructor path validates the tree invariants.
class Tree {
 public:
  /// Throws TreeError if the edges do not form a tree on 0..n-1.
  Tree(std::size_t n, std::vector<Edge> edges);

  static Tree singleton() { return Tree(1, {}); }

  std::size_t order() const { return adjacency_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Edge e) const;
  bool is_path() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // sorted ascending
};

struct RootedTree {
  Tree tree;
  Vertex root = 0;

  RootedTree(Tree t, Vertex r);
  std::size_t order() const { return tree.order(); }
  std::size_t root_degree() const { return tree.degree(root); }
};

enum class EdgeClass { OnPendantPath, Internal };

std::string_view to_string(EdgeClass c);

/// Maximal internal path through an edge: hubs v1 and v2 (degree >= 3) joined
/// by a path with l+1 vertices, and the two sides hanging off the hubs.
struct InternalPathDecomposition {
  Vertex v1 = 0;
  Vertex v2 = 0;
  std::size_t l = 0;
  std::vector<Vertex> interior;  // w1..w_{l-1}, ids in the original tree
  RootedTree side1;
  RootedTree side2;
  Edge contracted;  // normalized edge v1 w1 (v1 v2 when l = 1)
};

// Text format: first line n, then n-1 lines "u v"; '#' lines are comments.
// ';' is accepted as a line separator so canonical strings parse back.
Tree parse_tree(std::string_view text);
std::string format_tree(const Tree& t, char line_separator = '\n');
/// Splits a stream of tree texts separated by lines holding a single '%'.
std::vector<Tree> parse_tree_stream(std::string_view text);

Tree contract_edge(const Tree& t, Edge e);
EdgeClass classify_edge(const Tree& t, Edge e);
InternalPathDecomposition internal_path_of(const Tree& t, Edge e);

/// Identifies the roots; a's ids are kept, b's non-root ids follow.
RootedTree union_at_root(const RootedTree& a, const RootedTree& b);
/// Hangs a path of `length` new vertices off a.root; the far end is the new root.
RootedTree attach_path(const RootedTree& a, std::size_t length);
/// T(a, b, l): roots joined by a path with l+1 vertices (l-1 between them).
/// l = 0 is the union at the roots. Result is rooted at a's root.
RootedTree join_by_path(const RootedTree& a, const RootedTree& b, std::size_t l);

// Named families.
Tree path(std::size_t n);
RootedTree star(std::size_t leaves);                // K_{1,k} rooted at the center
RootedTree p22();                                   // P3 rooted at the center
RootedTree p23();                                   // P4 rooted at an internal vertex
RootedTree double_star(std::size_t a, std::size_t b);
RootedTree dumbbell(std::size_t a, std::size_t b, std::size_t l);
Tree path_with_center_leaf(std::size_t n);
/// Pendant edge of path_with_center_leaf(n).
Edge center_leaf_edge(std::size_t n);

/// Parses "path(5)", "star(3)", "p22", "p23", "double_star(2,2)",
/// "dumbbell(2,3,4)", "path_with_center_leaf(9)".
RootedTree make_family(std::string_view spec);

/// Isomorphism-invariant relabeling: rooted at the center (the smaller
/// encoding of the two centers when bicentral), vertices numbered in
/// canonical preorder. Isomorphic trees produce identical results.
Tree canonical_tree(const Tree& t);
/// canonical_tree in the text format with ';' separators.
std::string canonical_string(const Tree& t);
/// Rooted analogue: preorder level sequence with children in canonical order.
std::vector<std::size_t> rooted_level_sequence(const Tree& t, Vertex root);
std::string rooted_canonical_string(const RootedTree& t);
bool isomorphic(const Tree& a, const Tree& b);
bool isomorphic(const RootedTree& a, const RootedTree& b);

/// Centers of the tree (one or two vertices).
std::vector<Vertex> centers(const Tree& t);

}  // namespace mst
