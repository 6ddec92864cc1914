// Command-line front end: mean subtree order statistics and verification
// campaigns. See README.md for the subcommands.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "mst/harness.hpp"
#include "mst/treegen.hpp"

namespace {

std::vector<std::size_t> parse_l_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(token, &pos);
    if (pos != token.size()) throw mst::ConfigError("bad --l entry '" + token + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  mst::RunConfig config;
  config.max_order = mst::max_generation_order();

  CLI::App app{"Mean subtree order: exact statistics and contraction verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--shards", config.shards, "Parallel shards for corpus scans");
  app.add_option("--seed", config.seed, "Seed for random generation");

  std::vector<std::size_t> edge;
  std::string l_list;
  std::size_t root = 0, root1 = 0, root2 = 0;
  std::string family;

  auto* gen = app.add_subcommand("gen", "Emit all free trees of order n ('%'-separated) or random labeled trees");
  gen->add_option("--n", config.n, "Order");
  gen->add_option("--random", config.random_count, "Emit this many random labeled trees (seeds seed, seed+1, ...)");
  gen->add_option("--family", family, "Emit one named tree, e.g. dumbbell(2,2,3)");
  gen->add_flag("--split", config.split, "One file per tree under --out DIR");

  auto* stats = app.add_subcommand("stats", "Subtree counts and the three means");
  auto* oracle = app.add_subcommand("oracle", "Brute-force counts and order histogram");
  CLI::Option* root_opts[2];
  int slot = 0;
  for (auto* sub : {stats, oracle}) {
    sub->add_option("--tree", config.tree_source, "Tree file or family spec")->required();
    root_opts[slot++] = sub->add_option("--root", root, "Root vertex");
  }

  auto* contract = app.add_subcommand("contract", "Contraction difference for one edge");
  contract->add_option("--tree", config.tree_source, "Tree file or family spec")->required();
  contract->add_option("--edge", edge, "Edge endpoints U V")->expected(2)->required();

  auto* classify = app.add_subcommand("classify", "Pendant-path / internal classification of edges");
  classify->add_option("--tree", config.tree_source, "Tree file or family spec")->required();
  classify->add_option("--edge", edge, "Edge endpoints U V (default: every edge)")->expected(2);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification campaigns");
  verify->add_option("--checks", config.checks, "all|theorem|inequalities|parts|2.1..2.8")->delimiter(',');
  verify->add_option("--max-n", config.max_n, "Largest tree order")->required();

  auto* extremal = app.add_subcommand("extremal", "Largest contraction difference");
  extremal->add_option("--n", config.n, "Order")->required();
  extremal->add_option("--mode", config.mode, "family|exhaustive");

  auto* asymptotic = app.add_subcommand("asymptotic", "d(l) - 1/3 along a growing internal path");
  asymptotic->add_option("--t1", config.side1_source, "Side 1: tree file or family spec")->required();
  asymptotic->add_option("--t2", config.side2_source, "Side 2: tree file or family spec")->required();
  auto* r1 = asymptotic->add_option("--r1", root1, "Root of side 1");
  auto* r2 = asymptotic->add_option("--r2", root2, "Root of side 2");
  asymptotic->add_option("--l", l_list, "Comma-separated ascending l values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mst::kExitUsage;
  }

  try {
    config.format = mst::parse_format(format);
    if (!out_path.empty()) config.out_path = out_path;
    if (edge.size() == 2) config.edge = mst::Edge{edge[0], edge[1]};
    if (!family.empty()) config.family = family;
    if (*root_opts[0] || *root_opts[1]) config.root = root;
    if (*r1) config.root1 = root1;
    if (*r2) config.root2 = root2;
    if (!l_list.empty()) config.l_values = parse_l_list(l_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mst::kExitUsage;
  }

  if (app.got_subcommand(gen)) config.command = mst::Command::Gen;
  else if (app.got_subcommand(stats)) config.command = mst::Command::Stats;
  else if (app.got_subcommand(oracle)) config.command = mst::Command::Oracle;
  else if (app.got_subcommand(contract)) config.command = mst::Command::Contract;
  else if (app.got_subcommand(classify)) config.command = mst::Command::Classify;
  else if (app.got_subcommand(verify)) config.command = mst::Command::Verify;
  else if (app.got_subcommand(extremal)) config.command = mst::Command::Extremal;
  else config.command = mst::Command::Asymptotic;

  return mst::run(config, std::cout, std::cerr);
}
