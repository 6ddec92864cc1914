#include "mst/treegen.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>
#include <random>
#include <string>

namespace mst {

std::size_t max_generation_order() {
  if (const char* env = std::getenv("MST_MAX_N")) {
    try {
      std::size_t pos = 0;
      unsigned long value = std::stoul(env, &pos);
      if (pos == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxOrder;
}

namespace {

using Levels = std::vector<std::size_t>;

std::optional<Levels> next_rooted(const Levels& pred, std::optional<std::size_t> start = std::nullopt) {
  std::size_t p = 0;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Levels result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits off the subtree under the first child of the root.
std::pair<Levels, Levels> split(const Levels& layout) {
  std::size_t m = layout.size();
  for (std::size_t i = 2; i < layout.size(); ++i)
    if (layout[i] == 1) {
      m = i;
      break;
    }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Levels rest{0};
  rest.insert(rest.end(), layout.begin() + static_cast<std::ptrdiff_t>(m), layout.end());
  return {left, rest};
}

Levels next_free(const Levels& candidate) {
  auto [left, rest] = split(candidate);
  const std::size_t left_height = *std::max_element(left.begin(), left.end());
  const std::size_t rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  Levels next = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split(next);
    const std::size_t h = *std::max_element(new_left.begin(), new_left.end());
    for (std::size_t i = 0; i <= h; ++i) next[next.size() - 1 - h + i] = i + 1;
  }
  return next;
}

Tree from_levels(const Levels& levels) {
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

TreeIterator::TreeIterator(std::size_t n, std::size_t max_order) : n_(n) {
  if (n < 1 || n > max_order)
    throw BudgetError("tree order " + std::to_string(n) + " outside 1.." + std::to_string(max_order));
  // Initial candidate: a path of height floor(n/2) with a second branch.
  Levels start;
  for (std::size_t i = 0; i <= n / 2; ++i) start.push_back(i);
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) start.push_back(i);
  pending_ = std::move(start);
}

std::optional<std::vector<std::size_t>> TreeIterator::advance() {
  if (!pending_) return std::nullopt;
  if (n_ == 1) {
    Levels single = *pending_;
    pending_.reset();
    ++position_;
    return single;
  }
  Levels current = next_free(*pending_);
  pending_ = next_rooted(current);
  ++position_;
  return current;
}

std::optional<Tree> TreeIterator::next() {
  auto levels = advance();
  if (!levels) return std::nullopt;
  return from_levels(*levels);
}

std::size_t TreeIterator::skip(std::size_t count) {
  std::size_t skipped = 0;
  while (skipped < count && advance()) ++skipped;
  return skipped;
}

std::vector<Tree> all_trees(std::size_t n, std::size_t max_order) {
  std::vector<Tree> out;
  TreeIterator it(n, max_order);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Tree> tree_range(std::size_t n, std::size_t begin, std::size_t end, std::size_t max_order) {
  std::vector<Tree> out;
  TreeIterator it(n, max_order);
  it.skip(begin);
  while (it.position() < end) {
    auto t = it.next();
    if (!t) break;
    out.push_back(std::move(*t));
  }
  return out;
}

std::size_t count_trees(std::size_t n, std::size_t max_order) {
  TreeIterator it(n, max_order);
  return it.skip(static_cast<std::size_t>(-1));
}

Tree prufer_decode(std::span<const std::size_t> sequence, std::size_t n) {
  if (n == 1) return Tree::singleton();
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : sequence) ++degree.at(x);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (std::size_t x : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  Vertex b = leaves.top();
  edges.push_back({a, b});
  return Tree(n, std::move(edges));
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> sequence(n - 2);
  for (auto& x : sequence) x = pick(rng);
  return prufer_decode(sequence, n);
}

}  // namespace mst
