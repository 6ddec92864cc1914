#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mst/report.hpp"
#include "mst/tree.hpp"

namespace mst {

enum class Command { Gen, Stats, Oracle, Contract, Classify, Verify, Extremal, Asymptotic };

enum ExitCode : int {
  kExitPass = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::Stats;
  ReportFormat format = ReportFormat::Json;
  std::optional<std::string> out_path;
  std::size_t shards = 1;
  std::uint64_t seed = 0;
  std::size_t max_order = 14;
  bool include_wall_time = true;

  // gen
  std::size_t n = 0;
  std::size_t random_count = 0;  // > 0: seeded random labeled trees instead of the full corpus
  std::optional<std::string> family;
  bool split = false;  // one file per tree under out_path

  // stats, oracle, contract, classify: a tree file or a family spec
  std::string tree_source;
  std::optional<std::size_t> root;
  std::optional<Edge> edge;

  // verify
  std::vector<std::string> checks;
  std::size_t max_n = 0;

  // extremal
  std::string mode = "family";

  // asymptotic
  std::string side1_source;
  std::string side2_source;
  std::optional<std::size_t> root1;
  std::optional<std::size_t> root2;
  std::vector<std::size_t> l_values;
};

/// Throws ConfigError for unusable settings, BudgetError for orders above
/// max_order.
void validate(const RunConfig& config);

/// Executes a campaign and writes its report to out_path or `out`.
/// Returns an ExitCode; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// A path to a tree file, or a family spec such as "p22" or "dumbbell(2,2,3)".
/// Families keep their natural root unless `root` overrides it.
RootedTree load_rooted(const std::string& source, std::optional<std::size_t> root);

}  // namespace mst
