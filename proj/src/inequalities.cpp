#include "mst/inequalities.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "mst/treegen.hpp"

namespace mst {

std::string_view label(InequalityId id) {
  switch (id) {
    case InequalityId::I2_1: return "2.1";
    case InequalityId::I2_2: return "2.2";
    case InequalityId::I2_3: return "2.3";
    case InequalityId::I2_4: return "2.4";
    case InequalityId::I2_5: return "2.5";
    case InequalityId::I2_6: return "2.6";
    case InequalityId::I2_7: return "2.7";
    case InequalityId::I2_8: return "2.8";
  }
  return "?";
}

InequalityId parse_inequality(std::string_view text) {
  for (InequalityId id : kAllInequalities)
    if (label(id) == text) return id;
  throw std::invalid_argument("unknown inequality '" + std::string(text) + "'");
}

bool has_exclusions(InequalityId id) { return id == InequalityId::I2_5 || id == InequalityId::I2_6; }

std::string_view to_string(RootScope scope) {
  return scope == RootScope::AllRoots ? "all-roots" : "deg-ge-2-roots";
}

Margin margin(InequalityId id, const SubtreeStats& s) {
  const BigInt& nv = s.n_v;
  const BigInt& rv = s.r_v;
  const BigInt& nt = s.n_t;
  const BigInt& rt = s.r_t;
  switch (id) {
    case InequalityId::I2_1: return {nv * nv + nv - 2 * rv};
    case InequalityId::I2_2: return {nv * nv + nv + nt - 3 * rv};
    case InequalityId::I2_3: return {rv - nt};
    case InequalityId::I2_4: return {nv * nt + 2 * nt - 3 * rt};
    case InequalityId::I2_5: return {nv * nv + nv - 3 * rv};
    case InequalityId::I2_6: return {nv * nt + nt - 3 * rt, Relation::Positive};
    case InequalityId::I2_7: return {3 * (nt * rv - nv * rt) - (nt * nt - nv * nt)};
    case InequalityId::I2_8: return {nv * nt - nv * nv + nt - nv - 3 * (rt - rv)};
  }
  throw std::logic_error("unhandled inequality id");
}

const std::set<std::string>& exclusion_list() {
  static const std::set<std::string> list{rooted_canonical_string(p22()), rooted_canonical_string(p23())};
  return list;
}

namespace {

struct ShardResult {
  ViolationReport report;
  std::size_t identity_failures = 0;
  std::optional<BigInt> min_nv_non_exceptional;
};

ShardResult scan_trees(const std::vector<Tree>& trees, const ScanOptions& options) {
  ShardResult out;
  for (const Tree& generated : trees) {
    const Tree t = canonical_tree(generated);
    const std::string tree_string = format_tree(t, ';');
    ++out.report.corpus_size;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (options.scope == RootScope::DegreeAtLeastTwo && t.degree(v) < 2) continue;
      ++out.report.cases;
      const SubtreeStats s = subtree_stats(t, v);

      std::string rooted;
      auto rooted_class = [&]() -> const std::string& {
        if (rooted.empty()) rooted = rooted_canonical_string(RootedTree(t, v));
        return rooted;
      };
      if (t.degree(v) >= 2 && !exclusion_list().contains(rooted_class()) &&
          (!out.min_nv_non_exceptional || s.n_v < *out.min_nv_non_exceptional))
        out.min_nv_non_exceptional = s.n_v;

      // 2.2 + 2.8 = 2.4, and 2.1 = 2.2 + (R_v - N_T), as integer identities.
      const BigInt m22 = margin(InequalityId::I2_2, s).value;
      if (m22 + margin(InequalityId::I2_8, s).value != margin(InequalityId::I2_4, s).value ||
          margin(InequalityId::I2_1, s).value != m22 + (s.r_v - s.n_t)) {
        ++out.identity_failures;
        out.report.violations.push_back(Violation{
            .tree = tree_string, .site = "root " + std::to_string(v), .check = "identity", .value = to_string(m22),
            .rooted = rooted_class()});
      }

      for (InequalityId id : options.ids) {
        const Margin m = margin(id, s);
        if (m.satisfied()) continue;
        out.report.violations.push_back(Violation{
            .tree = tree_string,
            .site = "root " + std::to_string(v),
            .check = std::string(label(id)),
            .value = to_string(m.value),
            .rooted = rooted_class(),
            .expected = has_exclusions(id) && exclusion_list().contains(rooted_class()),
        });
      }
    }
  }
  return out;
}

}  // namespace

ViolationReport scan_corpus(const ScanOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.n_min < 1 || options.n_min > options.n_max)
    throw std::invalid_argument("scan needs 1 <= n_min <= n_max");
  if (options.n_max > options.max_order)
    throw BudgetError("scan order " + std::to_string(options.n_max) + " exceeds budget " +
                      std::to_string(options.max_order));
  const std::size_t shards = std::max<std::size_t>(1, options.shards);

  std::vector<ShardResult> results;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    const std::size_t total = count_trees(n, options.max_order);
    std::vector<ShardResult> partial(shards);
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < shards; ++k) {
      workers.emplace_back([&, k] {
        auto trees = tree_range(n, k * total / shards, (k + 1) * total / shards, options.max_order);
        partial[k] = scan_trees(trees, options);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) results.push_back(std::move(p));
  }

  ViolationReport report;
  report.corpus = "free trees, n = " + std::to_string(options.n_min) + ".." + std::to_string(options.n_max);
  report.scope = std::string(to_string(options.scope));
  for (InequalityId id : options.ids) report.checks.emplace_back(label(id));

  std::size_t identity_failures = 0;
  std::optional<BigInt> min_nv;
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::set<std::string>> violated_classes;
  for (const ShardResult& r : results) {
    report.corpus_size += r.report.corpus_size;
    report.cases += r.report.cases;
    identity_failures += r.identity_failures;
    if (r.min_nv_non_exceptional && (!min_nv || *r.min_nv_non_exceptional < *min_nv))
      min_nv = r.min_nv_non_exceptional;
    for (const Violation& v : r.report.violations) {
      if (!seen.insert({v.check, v.rooted}).second) continue;
      violated_classes[v.check].insert(v.rooted);
      report.violations.push_back(v);
    }
  }

  // Exclusion matching: together, the excluded inequalities must fail on
  // every exclusion-list tree inside the corpus.
  std::set<std::string> excluded_hits;
  bool any_excluded = false;
  for (InequalityId id : options.ids) {
    if (!has_exclusions(id)) continue;
    any_excluded = true;
    for (const auto& c : violated_classes[std::string(label(id))])
      if (exclusion_list().contains(c)) excluded_hits.insert(c);
  }
  if (any_excluded) {
    for (const RootedTree& r : {p22(), p23()}) {
      const std::string c = rooted_canonical_string(r);
      if (r.order() >= options.n_min && r.order() <= options.n_max && !excluded_hits.contains(c))
        report.missing_exclusions.push_back(c);
    }
  }

  report.details["identity_failures"] = identity_failures;
  if (options.scope == RootScope::DegreeAtLeastTwo || min_nv)
    report.details["min_nv_non_exceptional"] = min_nv ? to_string(*min_nv) : std::string("none");
  nlohmann::ordered_json by_check = nlohmann::ordered_json::object();
  for (InequalityId id : options.ids) {
    const auto& classes = violated_classes[std::string(label(id))];
    by_check[std::string(label(id))] = std::vector<std::string>(classes.begin(), classes.end());
  }
  report.details["violated_rooted_classes"] = by_check;
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace mst
