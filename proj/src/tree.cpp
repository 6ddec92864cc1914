#include "mst/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

namespace mst {

std::string_view to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::Syntax: return "syntax";
    case TreeErrorKind::BadOrder: return "bad-order";
    case TreeErrorKind::BadVertexId: return "bad-vertex-id";
    case TreeErrorKind::SelfLoop: return "self-loop";
    case TreeErrorKind::DuplicateEdge: return "duplicate-edge";
    case TreeErrorKind::EdgeCount: return "edge-count";
    case TreeErrorKind::Cyclic: return "cyclic";
    case TreeErrorKind::Disconnected: return "disconnected";
    case TreeErrorKind::NotAnEdge: return "not-an-edge";
    case TreeErrorKind::NotInternal: return "not-internal";
    case TreeErrorKind::BadFamily: return "bad-family";
  }
  return "unknown";
}

std::string_view to_string(EdgeClass c) {
  return c == EdgeClass::Internal ? "internal" : "pendant-path";
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

Tree::Tree(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
  if (n == 0) throw TreeError(TreeErrorKind::BadOrder, "tree order must be positive");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n)
      throw TreeError(TreeErrorKind::BadVertexId, "edge " + edge_str(e) + " has id outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw TreeError(TreeErrorKind::SelfLoop, "self-loop at " + std::to_string(e.u));
    if (!seen.insert(std::minmax(e.u, e.v)).second)
      throw TreeError(TreeErrorKind::DuplicateEdge, "duplicate edge " + edge_str(e));
  }
  if (edges_.size() > n - 1)
    throw TreeError(TreeErrorKind::EdgeCount, std::to_string(edges_.size()) + " edges exceed n-1 = " + std::to_string(n - 1));
  DisjointSets sets(n);
  for (const Edge& e : edges_)
    if (!sets.unite(e.u, e.v)) throw TreeError(TreeErrorKind::Cyclic, "edge " + edge_str(e) + " closes a cycle");
  if (edges_.size() < n - 1)
    throw TreeError(TreeErrorKind::Disconnected, "only " + std::to_string(edges_.size()) + " edges for " + std::to_string(n) + " vertices");

  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Tree::has_edge(Edge e) const {
  if (e.u >= order() || e.v >= order()) return false;
  const auto& nbrs = adjacency_[e.u];
  return std::binary_search(nbrs.begin(), nbrs.end(), e.v);
}

bool Tree::is_path() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [](const auto& nbrs) { return nbrs.size() <= 2; });
}

RootedTree::RootedTree(Tree t, Vertex r) : tree(std::move(t)), root(r) {
  if (root >= tree.order())
    throw TreeError(TreeErrorKind::BadVertexId, "root " + std::to_string(root) + " is not a vertex");
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
    start = end + 1;
  }
  return lines;
}

std::vector<std::size_t> parse_numbers(std::string_view line) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw TreeError(TreeErrorKind::Syntax, "expected non-negative integers in '" + std::string(line) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw TreeError(TreeErrorKind::Syntax, "empty tree text");
  auto header = parse_numbers(lines[0]);
  if (header.size() != 1) throw TreeError(TreeErrorKind::Syntax, "first line must hold the vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto nums = parse_numbers(lines[i]);
    if (nums.size() != 2) throw TreeError(TreeErrorKind::Syntax, "edge line must hold two ids: '" + std::string(lines[i]) + "'");
    edges.push_back({nums[0], nums[1]});
  }
  return Tree(header[0], std::move(edges));
}

std::string format_tree(const Tree& t, char line_separator) {
  std::string out = std::to_string(t.order());
  for (const Edge& e : t.edges()) {
    out += line_separator;
    out += std::to_string(e.u) + " " + std::to_string(e.v);
  }
  return out;
}

std::vector<Tree> parse_tree_stream(std::string_view text) {
  std::vector<Tree> trees;
  std::string current;
  bool has_content = false;
  std::istringstream in{std::string(text)};
  std::string line;
  auto flush = [&] {
    if (has_content) trees.push_back(parse_tree(current));
    current.clear();
    has_content = false;
  };
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '%') {
      flush();
      continue;
    }
    if (first != std::string::npos && line[first] != '#') has_content = true;
    current += line;
    current += '\n';
  }
  flush();
  return trees;
}

// ---------------------------------------------------------------------------
// Contraction and classification

namespace {

void require_edge(const Tree& t, Edge e) {
  if (!t.has_edge(e)) throw TreeError(TreeErrorKind::NotAnEdge, edge_str(e) + " is not an edge of the tree");
}

// Vertices of the component of `start` in t - {start, blocked}, ascending.
std::vector<Vertex> side_of(const Tree& t, Vertex start, Vertex blocked) {
  std::vector<Vertex> out{start};
  std::vector<bool> seen(t.order(), false);
  seen[start] = true;
  seen[blocked] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Vertex w : t.neighbors(out[i]))
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Side of `start` away from `blocked` is a path ending at `start`.
bool side_is_pendant_path(const Tree& t, Vertex start, Vertex blocked) {
  if (t.degree(start) > 2) return false;
  Vertex prev = blocked;
  Vertex cur = start;
  while (true) {
    if (t.degree(cur) == 1) return true;
    if (t.degree(cur) > 2) return false;
    auto nbrs = t.neighbors(cur);
    Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
}

RootedTree induced_rooted(const Tree& t, const std::vector<Vertex>& vertices, Vertex root) {
  std::vector<std::size_t> index(t.order(), t.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : t.edges())
    if (index[e.u] < t.order() && index[e.v] < t.order()) edges.push_back({index[e.u], index[e.v]});
  return RootedTree(Tree(vertices.size(), std::move(edges)), index[root]);
}

}  // namespace

Tree contract_edge(const Tree& t, Edge e) {
  require_edge(t, e);
  const Vertex keep = std::min(e.u, e.v);
  const Vertex drop = std::max(e.u, e.v);
  auto relabel = [&](Vertex x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
  std::vector<Edge> edges;
  edges.reserve(t.edges().size() - 1);
  for (const Edge& f : t.edges()) {
    if (std::minmax(f.u, f.v) == std::minmax(e.u, e.v)) continue;
    edges.push_back({relabel(f.u), relabel(f.v)});
  }
  return Tree(t.order() - 1, std::move(edges));
}

EdgeClass classify_edge(const Tree& t, Edge e) {
  require_edge(t, e);
  if (side_is_pendant_path(t, e.u, e.v) || side_is_pendant_path(t, e.v, e.u)) return EdgeClass::OnPendantPath;
  return EdgeClass::Internal;
}

InternalPathDecomposition internal_path_of(const Tree& t, Edge e) {
  if (classify_edge(t, e) != EdgeClass::Internal)
    throw TreeError(TreeErrorKind::NotInternal, edge_str(e) + " lies on a pendant path");

  // Walks through degree-2 vertices; the walk ends at a hub since neither
  // side is a pendant path.
  auto walk = [&](Vertex start, Vertex blocked) {
    std::vector<Vertex> seq{start};
    Vertex prev = blocked;
    Vertex cur = start;
    while (t.degree(cur) == 2) {
      auto nbrs = t.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
      seq.push_back(cur);
    }
    return seq;
  };
  auto toward_v1 = walk(e.u, e.v);
  auto toward_v2 = walk(e.v, e.u);
  std::vector<Vertex> path(toward_v1.rbegin(), toward_v1.rend());
  path.insert(path.end(), toward_v2.begin(), toward_v2.end());

  const std::size_t l = path.size() - 1;
  const Vertex v1 = path.front();
  const Vertex v2 = path.back();
  return InternalPathDecomposition{
      .v1 = v1,
      .v2 = v2,
      .l = l,
      .interior = std::vector<Vertex>(path.begin() + 1, path.end() - 1),
      .side1 = induced_rooted(t, side_of(t, v1, path[1]), v1),
      .side2 = induced_rooted(t, side_of(t, v2, path[l - 1]), v2),
      .contracted = Edge{v1, path[1]},
  };
}

// ---------------------------------------------------------------------------
// Composition

RootedTree union_at_root(const RootedTree& a, const RootedTree& b) {
  const std::size_t n = a.order() + b.order() - 1;
  std::vector<Vertex> map(b.order());
  Vertex next = a.order();
  for (Vertex x = 0; x < b.order(); ++x) map[x] = x == b.root ? a.root : next++;
  std::vector<Edge> edges(a.tree.edges().begin(), a.tree.edges().end());
  for (const Edge& e : b.tree.edges()) edges.push_back({map[e.u], map[e.v]});
  return RootedTree(Tree(n, std::move(edges)), a.root);
}

RootedTree attach_path(const RootedTree& a, std::size_t length) {
  if (length == 0) return a;
  std::vector<Edge> edges(a.tree.edges().begin(), a.tree.edges().end());
  Vertex prev = a.root;
  for (std::size_t i = 0; i < length; ++i) {
    Vertex fresh = a.order() + i;
    edges.push_back({prev, fresh});
    prev = fresh;
  }
  return RootedTree(Tree(a.order() + length, std::move(edges)), prev);
}

RootedTree join_by_path(const RootedTree& a, const RootedTree& b, std::size_t l) {
  RootedTree joined = union_at_root(attach_path(a, l), b);
  return RootedTree(joined.tree, a.root);
}

// ---------------------------------------------------------------------------
// Families

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw TreeError(TreeErrorKind::BadFamily, what);
}

}  // namespace

Tree path(std::size_t n) {
  require(n >= 1, "path(n) needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree(n, std::move(edges));
}

RootedTree star(std::size_t leaves) {
  require(leaves >= 1, "star(k) needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return RootedTree(Tree(leaves + 1, std::move(edges)), 0);
}

RootedTree p22() { return star(2); }

RootedTree p23() { return RootedTree(path(4), 1); }

RootedTree double_star(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "double_star(a,b) needs a, b >= 1");
  return join_by_path(star(a), star(b), 1);
}

RootedTree dumbbell(std::size_t a, std::size_t b, std::size_t l) {
  require(a >= 1 && b >= 1 && l >= 1, "dumbbell(a,b,l) needs a, b, l >= 1");
  return join_by_path(star(a), star(b), l);
}

Tree path_with_center_leaf(std::size_t n) {
  require(n >= 2, "path_with_center_leaf(n) needs n >= 2");
  Tree spine = path(n - 1);
  std::vector<Edge> edges(spine.edges().begin(), spine.edges().end());
  edges.push_back(center_leaf_edge(n));
  return Tree(n, std::move(edges));
}

Edge center_leaf_edge(std::size_t n) { return Edge{(n - 2) / 2, n - 1}; }

RootedTree make_family(std::string_view spec) {
  std::string name(spec);
  std::vector<std::size_t> args;
  if (auto open = name.find('('); open != std::string::npos) {
    require(name.back() == ')', "unterminated family spec '" + std::string(spec) + "'");
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    name.resize(open);
    std::istringstream in(inner);
    std::string token;
    while (std::getline(in, token, ',')) {
      std::size_t value = 0;
      auto first = token.find_first_not_of(' ');
      require(first != std::string::npos, "empty family argument");
      auto [ptr, ec] = std::from_chars(token.data() + first, token.data() + token.size(), value);
      require(ec == std::errc() && ptr == token.data() + token.size(), "bad family argument '" + token + "'");
      args.push_back(value);
    }
  }
  auto arity = [&](std::size_t k) { require(args.size() == k, name + " takes " + std::to_string(k) + " argument(s)"); };
  if (name == "path") {
    arity(1);
    return RootedTree(path(args[0]), 0);
  }
  if (name == "star") {
    arity(1);
    return star(args[0]);
  }
  if (name == "p22") {
    arity(0);
    return p22();
  }
  if (name == "p23") {
    arity(0);
    return p23();
  }
  if (name == "double_star") {
    arity(2);
    return double_star(args[0], args[1]);
  }
  if (name == "dumbbell") {
    arity(3);
    return dumbbell(args[0], args[1], args[2]);
  }
  if (name == "path_with_center_leaf") {
    arity(1);
    return RootedTree(path_with_center_leaf(args[0]), center_leaf_edge(args[0]).u);
  }
  throw TreeError(TreeErrorKind::BadFamily, "unknown family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Canonical forms

std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : t.neighbors(leaf))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<std::size_t> rooted_level_sequence(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, n);
  std::vector<std::size_t> depth(n, 0);
  std::vector<Vertex> bfs{root};
  parent[root] = root;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (Vertex w : t.neighbors(bfs[i]))
      if (parent[w] == n) {
        parent[w] = bfs[i];
        depth[w] = depth[bfs[i]] + 1;
        bfs.push_back(w);
      }

  // Ranks are assigned level by level from the deepest; a vertex's key is the
  // sorted list of its children's ranks, so equal ranks mean isomorphic
  // rooted subtrees and rank order is isomorphism-invariant.
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : bfs)
    if (v != root) children[parent[v]].push_back(v);
  std::vector<std::size_t> rank(n, 0);
  const std::size_t max_depth = depth[bfs.back()];
  std::vector<std::vector<Vertex>> levels(max_depth + 1);
  for (Vertex v : bfs) levels[depth[v]].push_back(v);
  std::vector<std::vector<std::size_t>> key(n);
  for (std::size_t d = max_depth + 1; d-- > 0;) {
    auto& level = levels[d];
    for (Vertex v : level) {
      key[v].clear();
      for (Vertex c : children[v]) key[v].push_back(rank[c]);
      std::sort(key[v].begin(), key[v].end());
    }
    std::sort(level.begin(), level.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    std::size_t r = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && key[level[i]] != key[level[i - 1]]) ++r;
      rank[level[i]] = r;
    }
  }

  std::vector<std::size_t> sequence;
  sequence.reserve(n);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    sequence.push_back(depth[v]);
    auto kids = children[v];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return rank[a] > rank[b]; });
    // Pushed in descending rank so the smallest rank is visited first.
    for (Vertex c : kids) stack.push_back(c);
  }
  return sequence;
}

namespace {

Tree tree_from_level_sequence(const std::vector<std::size_t>& levels) {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_depth;
  for (Vertex i = 0; i < levels.size(); ++i) {
    const std::size_t d = levels[i];
    if (d > 0) edges.push_back({last_at_depth[d - 1], i});
    last_at_depth.resize(d + 1);
    last_at_depth[d] = i;
  }
  return Tree(levels.size(), std::move(edges));
}

}  // namespace

Tree canonical_tree(const Tree& t) {
  std::vector<std::size_t> best;
  for (Vertex c : centers(t)) {
    auto seq = rooted_level_sequence(t, c);
    if (best.empty() || seq < best) best = std::move(seq);
  }
  return tree_from_level_sequence(best);
}

std::string canonical_string(const Tree& t) { return format_tree(canonical_tree(t), ';'); }

std::string rooted_canonical_string(const RootedTree& t) {
  std::string out;
  for (std::size_t d : rooted_level_sequence(t.tree, t.root)) {
    if (!out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_string(a) == canonical_string(b);
}

bool isomorphic(const RootedTree& a, const RootedTree& b) {
  return a.order() == b.order() && rooted_canonical_string(a) == rooted_canonical_string(b);
}

}  // namespace mst
