#pragma once

#include <cstddef>
#include <stdexcept>

#include "mst/rational.hpp"
#include "mst/tree.hpp"

namespace mst {

/// Subtree counts of a rooted tree: n_v/r_v over subtrees containing the root,
/// n_t/r_t over all subtrees ("r" is the summed order).
struct SubtreeStats {
  BigInt n_v{1};
  BigInt r_v{1};
  BigInt n_t{1};
  BigInt r_t{1};

  static SubtreeStats singleton() { return {}; }

  friend bool operator==(const SubtreeStats&, const SubtreeStats&) = default;
};

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hangs the old root below a new pendant root.
SubtreeStats extend_step(const SubtreeStats& s);
/// Identifies the roots of two rooted trees.
SubtreeStats union_step(const SubtreeStats& a, const SubtreeStats& b);
/// Closed form for `length` successive extend_steps.
SubtreeStats attach_path_stats(const SubtreeStats& s, std::size_t length);

/// Post-order fold over the tree rooted at `root`; children are merged in
/// ascending id order. Iterative, so arbitrarily deep paths are fine.
SubtreeStats subtree_stats(const Tree& t, Vertex root);
inline SubtreeStats subtree_stats(const RootedTree& t) { return subtree_stats(t.tree, t.root); }

// Means. The SubtreeStats overloads skip the fold when the stats are at hand.
Rational global_mean(const SubtreeStats& s);
Rational local_mean(const SubtreeStats& s);
/// Mean order of the subtrees avoiding the root. Throws DegenerateInput for a
/// singleton (no such subtree).
Rational mean_without_vertex(const SubtreeStats& s);

Rational global_mean(const Tree& t);
Rational local_mean(const Tree& t, Vertex v);
Rational mean_without_vertex(const Tree& t, Vertex v);

}  // namespace mst
