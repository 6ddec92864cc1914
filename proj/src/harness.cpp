#include "mst/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mst/contraction.hpp"
#include "mst/inequalities.hpp"
#include "mst/oracle.hpp"
#include "mst/stats.hpp"
#include "mst/treegen.hpp"

namespace mst {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kCheckNames{"all", "theorem", "inequalities", "parts",
                                        "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json mean_json(const Rational& x) { return {{"exact", x.str()}, {"decimal", x.decimal(12)}}; }

json stats_json(const SubtreeStats& s) {
  json out;
  out["n_v"] = to_string(s.n_v);
  out["r_v"] = to_string(s.r_v);
  out["n_t"] = to_string(s.n_t);
  out["r_t"] = to_string(s.r_t);
  out["global_mean"] = mean_json(global_mean(s));
  out["local_mean"] = mean_json(local_mean(s));
  out["mean_without_vertex"] = s.n_t == s.n_v ? json(nullptr) : mean_json(mean_without_vertex(s));
  return out;
}

// Flat key/value view used for csv and text output of single-result commands.
void write_flat(std::ostream& out, const json& value, ReportFormat format, const std::string& prefix = "") {
  if (format == ReportFormat::Csv && prefix.empty()) out << "key,value\n";
  for (const auto& [key, item] : value.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (item.is_object()) {
      write_flat(out, item, format, name);
      continue;
    }
    const std::string text = item.is_string() ? item.get<std::string>() : item.dump();
    if (format == ReportFormat::Csv) out << name << ',' << text << '\n';
    else out << name << ": " << text << '\n';
  }
}

void write_result(std::ostream& out, const json& value, ReportFormat format) {
  if (format == ReportFormat::Json) out << value.dump(2) << '\n';
  else write_flat(out, value, format);
}

json edge_json(Edge e) { return json::array({e.u, e.v}); }

int cmd_gen(const RunConfig& c, std::ostream& out) {
  std::vector<Tree> trees;
  if (c.family) {
    trees.push_back(make_family(*c.family).tree);
  } else if (c.random_count > 0) {
    for (std::size_t i = 0; i < c.random_count; ++i) trees.push_back(random_tree(c.n, c.seed + i));
  } else {
    for (const Tree& t : all_trees(c.n, c.max_order)) trees.push_back(canonical_tree(t));
  }
  if (c.split) {
    const std::filesystem::path dir(*c.out_path);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::ofstream file(dir / ("tree_" + std::to_string(trees[i].order()) + "_" + std::to_string(i) + ".tree"));
      file << format_tree(trees[i]) << '\n';
    }
    return kExitPass;
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) out << "%\n";
    out << format_tree(trees[i]) << '\n';
  }
  return kExitPass;
}

int cmd_stats(const RunConfig& c, std::ostream& out, bool with_oracle) {
  const RootedTree rooted = load_rooted(c.tree_source, c.root);
  json result;
  result["tree"] = format_tree(rooted.tree, ';');
  result["root"] = rooted.root;
  const SubtreeStats s = with_oracle ? oracle::oracle_stats(rooted.tree, rooted.root) : subtree_stats(rooted);
  const json counts = stats_json(s);
  for (const auto& [key, value] : counts.items()) result[key] = value;
  if (!with_oracle) {
    write_result(out, result, c.format);
    return kExitPass;
  }
  const oracle::SubtreeProfile profile = oracle::enumerate_profile(rooted.tree);
  if (c.format == ReportFormat::Json) {
    json histogram = json::array();
    for (const auto& [order, count] : profile.count_by_order) histogram.push_back({{"order", order}, {"count", count}});
    result["histogram"] = histogram;
    result["agrees_with_engine"] = s == subtree_stats(rooted);
    write_result(out, result, c.format);
  } else {
    write_flat(out, result, c.format);
    out << "order,count\n";
    for (const auto& [order, count] : profile.count_by_order) out << order << ',' << count << '\n';
  }
  return kExitPass;
}

int cmd_contract(const RunConfig& c, std::ostream& out) {
  const Tree t = load_rooted(c.tree_source, std::nullopt).tree;
  const ContractionReport r = contraction_difference(t, *c.edge);
  json result;
  result["tree"] = format_tree(t, ';');
  result["edge"] = edge_json(r.edge);
  result["class"] = std::string(to_string(r.edge_class));
  result["contracted"] = format_tree(contract_edge(t, r.edge), ';');
  result["mean_before"] = mean_json(r.before);
  result["mean_after"] = mean_json(r.after);
  result["difference"] = mean_json(r.difference);
  result["excess"] = mean_json(r.excess);
  write_result(out, result, c.format);
  return kExitPass;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const Tree t = load_rooted(c.tree_source, std::nullopt).tree;
  std::vector<Edge> edges;
  if (c.edge) edges.push_back(*c.edge);
  else edges.assign(t.edges().begin(), t.edges().end());
  json rows = json::array();
  for (const Edge& e : edges) {
    json row;
    row["edge"] = edge_json(e);
    const EdgeClass cls = classify_edge(t, e);
    row["class"] = std::string(to_string(cls));
    if (cls == EdgeClass::Internal) {
      const InternalPathDecomposition d = internal_path_of(t, e);
      row["v1"] = d.v1;
      row["v2"] = d.v2;
      row["l"] = d.l;
      row["side1"] = {{"order", d.side1.order()}, {"rooted", rooted_canonical_string(d.side1)}};
      row["side2"] = {{"order", d.side2.order()}, {"rooted", rooted_canonical_string(d.side2)}};
    }
    rows.push_back(std::move(row));
  }
  if (c.format == ReportFormat::Json) {
    out << json{{"tree", format_tree(t, ';')}, {"edges", rows}}.dump(2) << '\n';
  } else {
    if (c.format == ReportFormat::Csv) out << "u,v,class,v1,v2,l,side1_order,side2_order\n";
    for (const auto& row : rows) {
      const bool internal = row.contains("l");
      if (c.format == ReportFormat::Csv) {
        out << row["edge"][0] << ',' << row["edge"][1] << ',' << row["class"].get<std::string>();
        if (internal)
          out << ',' << row["v1"] << ',' << row["v2"] << ',' << row["l"] << ',' << row["side1"]["order"] << ','
              << row["side2"]["order"];
        else
          out << ",,,,,";
        out << '\n';
      } else {
        out << row["edge"][0] << '-' << row["edge"][1] << "  " << row["class"].get<std::string>();
        if (internal)
          out << "  v1=" << row["v1"] << " v2=" << row["v2"] << " l=" << row["l"] << " |T1|=" << row["side1"]["order"]
              << " |T2|=" << row["side2"]["order"];
        out << '\n';
      }
    }
  }
  return kExitPass;
}

struct Campaign {
  std::string name;
  ViolationReport report;
};

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  std::set<std::string> wanted(c.checks.begin(), c.checks.end());
  if (wanted.empty() || wanted.contains("all")) wanted = {"theorem", "inequalities", "parts"};
  if (wanted.contains("inequalities")) {
    wanted.erase("inequalities");
    for (InequalityId id : kAllInequalities) wanted.insert(std::string(label(id)));
  }

  std::vector<Campaign> campaigns;
  if (wanted.contains("theorem"))
    campaigns.push_back({"theorem", verify_theorem({1, c.max_n, c.shards, c.max_order})});
  std::vector<InequalityId> all_roots, deg_two;
  for (InequalityId id : kAllInequalities)
    if (wanted.contains(std::string(label(id)))) (has_exclusions(id) ? deg_two : all_roots).push_back(id);
  if (!all_roots.empty())
    campaigns.push_back({"inequalities/all-roots",
                         scan_corpus({1, c.max_n, all_roots, RootScope::AllRoots, c.shards, c.max_order})});
  if (!deg_two.empty())
    campaigns.push_back({"inequalities/deg-ge-2-roots",
                         scan_corpus({1, c.max_n, deg_two, RootScope::DegreeAtLeastTwo, c.shards, c.max_order})});
  if (wanted.contains("parts"))
    campaigns.push_back({"parts", verify_parts({1, c.max_n, c.shards, c.max_order})});

  ViolationReport combined;
  combined.corpus = "free trees, n = 1.." + std::to_string(c.max_n);
  combined.scope = "per check";
  for (std::size_t n = 1; n <= c.max_n; ++n) combined.corpus_size += count_trees(n, c.max_order);
  for (const Campaign& campaign : campaigns) {
    const ViolationReport& r = campaign.report;
    combined.cases += r.cases;
    combined.checks.insert(combined.checks.end(), r.checks.begin(), r.checks.end());
    combined.violations.insert(combined.violations.end(), r.violations.begin(), r.violations.end());
    combined.missing_exclusions.insert(combined.missing_exclusions.end(), r.missing_exclusions.begin(),
                                       r.missing_exclusions.end());
    combined.details[campaign.name] = {{"scope", r.scope}, {"cases", r.cases}, {"pass", r.pass()}, {"details", r.details}};
  }
  combined.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << emit_report(combined, c.format, c.include_wall_time);
  return combined.pass() ? kExitPass : kExitViolation;
}

int cmd_extremal(const RunConfig& c, std::ostream& out) {
  const ExtremalResult r = c.mode == "family" ? extremal_family(c.n) : extremal_exhaustive(c.n, c.max_order);
  json result;
  result["mode"] = c.mode;
  result["n"] = c.n;
  result["tree"] = format_tree(r.tree, ';');
  result["edge"] = edge_json(r.edge);
  result["difference"] = mean_json(r.difference);
  result["ratio"] = mean_json(r.ratio);
  write_result(out, result, c.format);
  return kExitPass;
}

int cmd_asymptotic(const RunConfig& c, std::ostream& out) {
  const RootedTree side1 = load_rooted(c.side1_source, c.root1);
  const RootedTree side2 = load_rooted(c.side2_source, c.root2);
  const auto series = asymptotic_scan(side1, side2, c.l_values);
  const Coefficients k = coefficients(subtree_stats(side1), subtree_stats(side2));
  const bool monotone = positive_and_decreasing(series);

  // Independent route for l = 1: contract the v1 v2 edge of the assembled tree.
  std::optional<bool> cross_check;
  if (!series.empty() && series.front().l == 1) {
    const Tree joined = join_by_path(side1, side2, 1).tree;
    cross_check = contraction_difference(joined, {side1.root, side1.order()}).excess == series.front().excess;
  }

  json result;
  result["side1"] = rooted_canonical_string(side1);
  result["side2"] = rooted_canonical_string(side2);
  result["positive_decreasing"] = monotone;
  result["scaled_limit"] = mean_json(scaled_excess_limit(k));
  result["l1_cross_check"] = cross_check ? json(*cross_check) : json(nullptr);
  if (c.format == ReportFormat::Json) {
    json rows = json::array();
    for (const auto& p : series)
      rows.push_back({{"l", p.l}, {"excess", mean_json(p.excess)}, {"scaled", mean_json(p.scaled)}});
    result["series"] = rows;
    write_result(out, result, c.format);
  } else {
    write_flat(out, result, c.format);
    out << "l,excess,excess_decimal,scaled_decimal\n";
    for (const auto& p : series)
      out << p.l << ',' << p.excess.str() << ',' << p.excess.decimal(12) << ',' << p.scaled.decimal(12) << '\n';
  }
  return monotone && cross_check.value_or(true) ? kExitPass : kExitViolation;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::Gen: return cmd_gen(c, out);
    case Command::Stats: return cmd_stats(c, out, false);
    case Command::Oracle: return cmd_stats(c, out, true);
    case Command::Contract: return cmd_contract(c, out);
    case Command::Classify: return cmd_classify(c, out);
    case Command::Verify: return cmd_verify(c, out);
    case Command::Extremal: return cmd_extremal(c, out);
    case Command::Asymptotic: return cmd_asymptotic(c, out);
  }
  return kExitUsage;
}

}  // namespace

RootedTree load_rooted(const std::string& source, std::optional<std::size_t> root) {
  if (source.empty()) throw ConfigError("missing tree source");
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return RootedTree(parse_tree(read_file(source)), root.value_or(0));
  RootedTree family = make_family(source);
  return root ? RootedTree(family.tree, *root) : family;
}

void validate(const RunConfig& c) {
  if (c.shards < 1) throw ConfigError("--shards must be at least 1");
  if (c.out_path && c.out_path->empty()) throw ConfigError("--out needs a path");
  switch (c.command) {
    case Command::Gen:
      if (c.family) break;
      if (c.n < 1) throw ConfigError("gen needs --n >= 1");
      if (c.random_count == 0 && c.n > c.max_order)
        throw BudgetError("gen order " + std::to_string(c.n) + " exceeds MST_MAX_N = " + std::to_string(c.max_order));
      if (c.split && !c.out_path) throw ConfigError("--split needs --out DIR");
      break;
    case Command::Stats:
    case Command::Oracle:
    case Command::Classify:
      if (c.tree_source.empty()) throw ConfigError("--tree is required");
      break;
    case Command::Contract:
      if (c.tree_source.empty()) throw ConfigError("--tree is required");
      if (!c.edge) throw ConfigError("contract needs --edge U V");
      break;
    case Command::Verify:
      if (c.max_n < 1) throw ConfigError("verify needs --max-n >= 1");
      if (c.max_n > c.max_order)
        throw BudgetError("--max-n " + std::to_string(c.max_n) + " exceeds MST_MAX_N = " + std::to_string(c.max_order));
      for (const auto& check : c.checks)
        if (!kCheckNames.contains(check)) throw ConfigError("unknown check '" + check + "'");
      break;
    case Command::Extremal:
      if (c.mode != "family" && c.mode != "exhaustive") throw ConfigError("--mode must be family or exhaustive");
      if (c.n < 2) throw ConfigError("extremal needs --n >= 2");
      if (c.mode == "exhaustive" && c.n > c.max_order)
        throw BudgetError("exhaustive order " + std::to_string(c.n) + " exceeds MST_MAX_N = " + std::to_string(c.max_order));
      break;
    case Command::Asymptotic:
      if (c.side1_source.empty() || c.side2_source.empty()) throw ConfigError("asymptotic needs --t1 and --t2");
      if (c.l_values.empty()) throw ConfigError("asymptotic needs --l values");
      for (std::size_t i = 0; i < c.l_values.size(); ++i)
        if (c.l_values[i] < 1 || (i > 0 && c.l_values[i] <= c.l_values[i - 1]))
          throw ConfigError("--l values must be positive and strictly ascending");
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.out_path && !config.split) {
      std::ostringstream buffer;
      const int code = dispatch(config, buffer);
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write '" + *config.out_path + "'");
      file << buffer.str();
      return code;
    }
    return dispatch(config, out);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mst
