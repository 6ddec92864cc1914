#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mst/tree.hpp"

namespace mst {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& name);

/// One failed check. `site` names the root ("root 3") or edge ("edge 2-5").
struct Violation {
  std::string tree;   // canonical string, ';' separated
  std::string site;
  std::string check;
  std::string value;  // exact integer margin or "p/q" difference
  std::string rooted;  // rooted canonical class, for root-scoped checks
  bool expected = false;  // labelled exclusion (e.g. P_{2,2} for 2.5)
};

/// Outcome of a verification campaign.
struct ViolationReport {
  std::string corpus;                 // e.g. "free trees, n = 1..10"
  std::string scope;                  // root/edge scope description
  std::size_t corpus_size = 0;        // trees examined
  std::size_t cases = 0;              // (tree, root) or (tree, edge) pairs
  std::vector<std::string> checks;
  std::vector<Violation> violations;
  std::vector<std::string> missing_exclusions;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double wall_time_s = 0.0;

  std::size_t unexpected() const;
  /// No unexpected violation and every required exclusion observed.
  bool pass() const;
  /// Appends `other`; reports are merged in shard order.
  void merge(const ViolationReport& other);
};

nlohmann::ordered_json to_json(const ViolationReport& report, bool include_wall_time = true);
std::string emit_report(const ViolationReport& report, ReportFormat format, bool include_wall_time = true);

}  // namespace mst
