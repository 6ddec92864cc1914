#include "mst/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

#include "mst/treegen.hpp"

namespace mst::oracle {

namespace {

using Mask = std::uint32_t;

class SubsetWalker {
 public:
  explicit SubsetWalker(const Tree& t) : adjacency_(t.order(), 0) {
    if (t.order() > kMaxOracleOrder)
      throw BudgetError("oracle enumeration limited to " + std::to_string(kMaxOracleOrder) + " vertices");
    for (const Edge& e : t.edges()) {
      adjacency_[e.u] |= Mask{1} << e.v;
      adjacency_[e.v] |= Mask{1} << e.u;
    }
  }

  template <typename Visit>
  void each_connected_subset(Visit&& visit) const {
    const std::size_t n = adjacency_.size();
    for (std::size_t anchor = 0; anchor < n; ++anchor) {
      // Only ids above the anchor may join, so each set is reached from its
      // minimum vertex alone.
      const Mask allowed = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
      const Mask above = allowed & ~((Mask{2} << anchor) - 1);
      const Mask start = Mask{1} << anchor;
      grow(start, adjacency_[anchor] & above, 0, above, visit);
    }
  }

 private:
  // Each candidate in `frontier` is either taken (recursing with its
  // neighbours added) or banned for every later branch at this level.
  template <typename Visit>
  void grow(Mask set, Mask frontier, Mask banned, Mask above, Visit& visit) const {
    visit(set);
    while (frontier != 0) {
      const Mask pick = frontier & (~frontier + 1);
      frontier &= ~pick;
      const auto w = static_cast<std::size_t>(std::countr_zero(pick));
      const Mask fresh = adjacency_[w] & above & ~set & ~banned & ~frontier & ~pick;
      grow(set | pick, frontier | fresh, banned, above, visit);
      banned |= pick;
    }
  }

  std::vector<Mask> adjacency_;
};

}  // namespace

BigInt SubtreeProfile::n_t() const {
  BigInt total = 0;
  for (const auto& [order, count] : count_by_order) total += to_big(count);
  return total;
}

BigInt SubtreeProfile::r_t() const {
  BigInt total = 0;
  for (const auto& [order, count] : count_by_order) total += to_big(order) * to_big(count);
  return total;
}

SubtreeProfile enumerate_profile(const Tree& t) {
  SubtreeProfile profile;
  SubsetWalker(t).each_connected_subset(
      [&](Mask set) { ++profile.count_by_order[static_cast<std::size_t>(std::popcount(set))]; });
  return profile;
}

SubtreeStats oracle_stats(const Tree& t, Vertex v) {
  if (v >= t.order()) throw TreeError(TreeErrorKind::BadVertexId, "vertex " + std::to_string(v) + " out of range");
  std::uint64_t n_v = 0, r_v = 0, n_t = 0, r_t = 0;
  const Mask target = Mask{1} << v;
  SubsetWalker(t).each_connected_subset([&](Mask set) {
    const auto size = static_cast<std::uint64_t>(std::popcount(set));
    ++n_t;
    r_t += size;
    if (set & target) {
      ++n_v;
      r_v += size;
    }
  });
  return {to_big(n_v), to_big(r_v), to_big(n_t), to_big(r_t)};
}

}  // namespace mst::oracle
