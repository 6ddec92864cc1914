#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "mst/stats.hpp"
#include "mst/tree.hpp"

namespace mst::oracle {

inline constexpr std::size_t kMaxOracleOrder = 20;

/// Number of subtrees of each order, found by explicit enumeration.
struct SubtreeProfile {
  std::map<std::size_t, std::uint64_t> count_by_order;

  BigInt n_t() const;
  BigInt r_t() const;
};

/// Enumerates every connected vertex subset once, anchored at its minimum id.
/// Throws BudgetError above kMaxOracleOrder vertices.
SubtreeProfile enumerate_profile(const Tree& t);

/// Counts of subtrees (and of those containing v) by direct enumeration.
SubtreeStats oracle_stats(const Tree& t, Vertex v);

}  // namespace mst::oracle
