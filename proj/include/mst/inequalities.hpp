#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mst/report.hpp"
#include "mst/stats.hpp"

namespace mst {

/// The eight subtree-count inequalities, numbered 2.1 .. 2.8.
enum class InequalityId {
  I2_1,  // N_v^2 + N_v >= 2 R_v
  I2_2,  // N_v^2 + N_v + N_T >= 3 R_v
  I2_3,  // R_v >= N_T
  I2_4,  // N_v N_T + 2 N_T >= 3 R_T
  I2_5,  // N_v^2 + N_v >= 3 R_v            (deg(v) >= 2, not P22/P23)
  I2_6,  // N_v N_T + N_T > 3 R_T           (deg(v) >= 2, not P22/P23)
  I2_7,  // 3 (N_T R_v - N_v R_T) >= N_T^2 - N_v N_T
  I2_8,  // N_v N_T - N_v^2 + N_T - N_v >= 3 (R_T - R_v)
};

inline constexpr InequalityId kAllInequalities[] = {
    InequalityId::I2_1, InequalityId::I2_2, InequalityId::I2_3,   InequalityId::I2_4,
    InequalityId::I2_5,  InequalityId::I2_6,   InequalityId::I2_7, InequalityId::I2_8,
};

/// "2.1" .. "2.8".
std::string_view label(InequalityId id);
InequalityId parse_inequality(std::string_view text);
/// True for 2.5 and 2.6, which hold only away from P_{2,2} and P_{2,3}.
bool has_exclusions(InequalityId id);

enum class Relation { NonNegative, Positive };

struct Margin {
  BigInt value;  // LHS - RHS, no division
  Relation relation = Relation::NonNegative;

  bool satisfied() const { return relation == Relation::Positive ? value > 0 : value >= 0; }
};

Margin margin(InequalityId id, const SubtreeStats& s);

enum class RootScope { AllRoots, DegreeAtLeastTwo };

std::string_view to_string(RootScope scope);

/// Rooted-tree classes (rooted canonical strings) allowed to fail the
/// excluded inequalities: P_{2,2} and P_{2,3}.
const std::set<std::string>& exclusion_list();

struct ScanOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::vector<InequalityId> ids;
  RootScope scope = RootScope::AllRoots;
  std::size_t shards = 1;
  std::size_t max_order = 14;
};

/// Margins for every (tree, root) in scope over all free trees of order
/// n_min..n_max. Violations are de-duplicated by rooted isomorphism class;
/// failures on exclusion-list trees are labelled expected.
ViolationReport scan_corpus(const ScanOptions& options);

}  // namespace mst
