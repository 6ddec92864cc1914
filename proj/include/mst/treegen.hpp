#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mst/tree.hpp"

namespace mst {

/// Raised when a request exceeds a configured generation or enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxOrder = 14;

/// Generation cap: MST_MAX_N from the environment, else 14.
std::size_t max_generation_order();

/// Yields every free tree of order n exactly once, in a fixed order.
///
/// Successor rule on canonical level sequences (Wright, Richmond, Odlyzko and
/// McKay): each free tree is visited once, as the level sequence of a
/// centre-rooted canonical form. Amortized constant work per tree.
class TreeIterator {
 public:
  /// Throws BudgetError unless 1 <= n <= max_order.
  explicit TreeIterator(std::size_t n, std::size_t max_order = max_generation_order());

  std::optional<Tree> next();
  /// Advances without materializing trees; returns how many were skipped.
  std::size_t skip(std::size_t count);
  /// Number of trees yielded or skipped so far.
  std::size_t position() const { return position_; }
  std::size_t order() const { return n_; }

 private:
  std::optional<std::vector<std::size_t>> advance();

  std::size_t n_;
  std::size_t position_ = 0;
  std::optional<std::vector<std::size_t>> pending_;
};

std::vector<Tree> all_trees(std::size_t n, std::size_t max_order = max_generation_order());
/// Trees with generation index in [begin, end).
std::vector<Tree> tree_range(std::size_t n, std::size_t begin, std::size_t end,
                             std::size_t max_order = max_generation_order());
std::size_t count_trees(std::size_t n, std::size_t max_order = max_generation_order());

/// Tree whose Prüfer sequence is `sequence` (entries < n, length n - 2).
Tree prufer_decode(std::span<const std::size_t> sequence, std::size_t n);
/// Uniform labeled tree, deterministic in (n, seed).
Tree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace mst
