#include "mst/stats.hpp"

#include <vector>

namespace mst {

SubtreeStats extend_step(const SubtreeStats& s) {
  const BigInt n_v = s.n_v + 1;
  const BigInt r_v = s.r_v + s.n_v + 1;
  return {n_v, r_v, s.n_t + n_v, s.r_t + r_v};
}

SubtreeStats union_step(const SubtreeStats& a, const SubtreeStats& b) {
  const BigInt n_v = a.n_v * b.n_v;
  const BigInt r_v = a.n_v * b.r_v + b.n_v * a.r_v - n_v;
  return {
      n_v,
      r_v,
      n_v + a.n_t - a.n_v + b.n_t - b.n_v,
      r_v + a.r_t - a.r_v + b.r_t - b.r_v,
  };
}

SubtreeStats attach_path_stats(const SubtreeStats& s, std::size_t length) {
  const BigInt l = to_big(length);
  const BigInt tri = l * (l + 1) / 2;
  const BigInt tet = l * (l + 1) * (l + 2) / 6;
  return {
      s.n_v + l,
      s.r_v + l * s.n_v + tri,
      s.n_t + l * s.n_v + tri,
      s.r_t + l * s.r_v + tri * s.n_v + tet,
  };
}

SubtreeStats subtree_stats(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  if (root >= n) throw TreeError(TreeErrorKind::BadVertexId, "root " + std::to_string(root) + " is not a vertex");

  std::vector<Vertex> parent(n, n);
  std::vector<Vertex> order{root};
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (parent[w] == n) {
        parent[w] = order[i];
        order.push_back(w);
      }

  // Reverse BFS order visits every child before its parent. Neighbour lists
  // are sorted, so each accumulator absorbs its children in ascending id order.
  std::vector<SubtreeStats> acc(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    for (Vertex w : t.neighbors(v))
      if (w != root && parent[w] == v) acc[v] = union_step(acc[v], extend_step(acc[w]));
  }
  return acc[root];
}

Rational global_mean(const SubtreeStats& s) { return Rational(s.r_t, s.n_t); }

Rational local_mean(const SubtreeStats& s) { return Rational(s.r_v, s.n_v); }

Rational mean_without_vertex(const SubtreeStats& s) {
  if (s.n_t == s.n_v) throw DegenerateInput("no subtree avoids the root of a singleton");
  return Rational(s.r_t - s.r_v, s.n_t - s.n_v);
}

Rational global_mean(const Tree& t) { return global_mean(subtree_stats(t, 0)); }

Rational local_mean(const Tree& t, Vertex v) { return local_mean(subtree_stats(t, v)); }

Rational mean_without_vertex(const Tree& t, Vertex v) { return mean_without_vertex(subtree_stats(t, v)); }

}  // namespace mst
