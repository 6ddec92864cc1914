#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mst/rational.hpp"
#include "mst/report.hpp"
#include "mst/stats.hpp"
#include "mst/tree.hpp"

namespace mst {

struct ContractionReport {
  Edge edge;
  EdgeClass edge_class = EdgeClass::OnPendantPath;
  Rational before;      // mean subtree order of T
  Rational after;       // mean subtree order of T with e contracted
  Rational difference;  // before - after
  Rational excess;      // difference - 1/3
};

ContractionReport contraction_difference(const Tree& t, Edge e);

// Internal-path algebra. Sides T1 (rooted at v1) and T2 (rooted at v2) are
// joined by a path with l+1 vertices; mean subtree order as a function of l:
//
//   mu(l) = (l^3/6 + (N1+N2)/2 l^2 + A l + B) / (l^2/2 + D l + C),
//   D = N1 + N2 - 1/2.
//
// N1, R1 are the root counts of T1 and NL, RL its whole-tree counts (same for
// T2 with N2, R2, NR, RR).
struct Coefficients {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  BigInt n1;
  BigInt n2;
};

Coefficients coefficients(const SubtreeStats& side1, const SubtreeStats& side2);

/// mu(l); l = 0 is the union of the two sides at their roots.
Rational mu_l(const Coefficients& k, std::size_t l);

/// d(l) - 1/3 = ([I] l(l-1) + [II] (2l-1) + [III]) / (3 den(l) den(l-1)).
struct Parts {
  Rational part_i;
  Rational part_ii;
  Rational part_iii;
};

Parts parts(const Coefficients& k);

/// mu(l) - mu(l-1) - 1/3 through the closed quotient in A, B, C, D:
///
///   numerator   ((D/6 + 1/4) D + C/6 - A/2) l(l-1) + ((D/6 + 1/4) C - B/2)(2l-1)
///               + AC - BD - C^2/3
///   denominator l^2 (l-1)^2 / 4 + (D/2) l(l-1)(2l-1) + (D^2 + C) l(l-1)
///               + DC (2l-1) + C^2 + C/2
///
/// Quadratic over quartic in l, so l^2 (d(l) - 1/3) tends to 4[I]/3.
/// Requires l >= 1.
Rational d_excess(const Coefficients& k, std::size_t l);

/// Limit of l^2 * d_excess(l).
Rational scaled_excess_limit(const Coefficients& k);

/// Lower bounds on the three parts valid when neither side is P_{2,2} or
/// P_{2,3}: 2[I] >= NL + NR, 2[II] >= N2 NL + N1 NR, [III] >= 3/2 (NL R2 + NR R1).
struct BoundChain {
  bool part_i = false;
  bool part_ii = false;
  bool part_iii = false;
  bool all() const { return part_i && part_ii && part_iii; }
};

BoundChain bound_chain(const SubtreeStats& side1, const SubtreeStats& side2);

struct CampaignOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::size_t shards = 1;
  std::size_t max_order = 14;
};

/// Every edge of every free tree in range: difference >= 1/3, equality
/// exactly on paths, strict on internal edges. Contractions are evaluated
/// directly from the two trees' stats.
ViolationReport verify_theorem(const CampaignOptions& options);

/// Every internal edge in range: the coefficient route reproduces the direct
/// contraction difference, and for non-exceptional sides the parts are
/// positive and satisfy their bound chains.
ViolationReport verify_parts(const CampaignOptions& options);

struct ExtremalResult {
  Tree tree;
  Edge edge;
  Rational difference;
  Rational ratio;  // difference / n
};

/// Pendant edge at the center of a path (path_with_center_leaf(n)).
ExtremalResult extremal_family(std::size_t n);
/// Largest contraction difference over every free tree of order n and edge.
ExtremalResult extremal_exhaustive(std::size_t n, std::size_t max_order = 14);

struct AsymptoticPoint {
  std::size_t l = 0;
  Rational excess;  // d(l) - 1/3
  Rational scaled;  // l^2 * excess
};

/// Requires deg(root) >= 2 on both sides and positive ascending l values.
std::vector<AsymptoticPoint> asymptotic_scan(const RootedTree& side1, const RootedTree& side2,
                                             std::span<const std::size_t> l_values);

/// Strictly positive and strictly decreasing along the series.
bool positive_and_decreasing(std::span<const AsymptoticPoint> series);

}  // namespace mst
