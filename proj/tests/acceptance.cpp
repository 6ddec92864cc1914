// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mst/contraction.hpp"
#include "mst/inequalities.hpp"
#include "mst/oracle.hpp"
#include "mst/stats.hpp"
#include "mst/treegen.hpp"
#include "support/brute.hpp"

using namespace mst;

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

struct Criterion {
  std::string name;
  std::function<std::string()> check;  // empty string on success, else the reason
  double limit_s = 0;                  // 0: no runtime limit
};

RootedTree random_branching_side(std::mt19937_64& rng, std::size_t max_order) {
  while (true) {
    Tree t = random_tree(3 + rng() % (max_order - 2), rng());
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) >= 2) hubs.push_back(v);
    if (!hubs.empty()) return RootedTree(t, hubs[rng() % hubs.size()]);
  }
}

std::string oracle_equality() {
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 9; ++n) trees += count_trees(n);
  if (trees != 95) return "corpus holds " + std::to_string(trees) + " trees, not 95";
  for (std::size_t n = 1; n <= 9; ++n)
    for (const Tree& t : all_trees(n)) {
      const auto profile = oracle::enumerate_profile(t);
      for (Vertex v = 0; v < n; ++v) {
        const SubtreeStats s = subtree_stats(t, v);
        if (!(s == oracle::oracle_stats(t, v))) return "engine/oracle mismatch on " + canonical_string(t);
        if (s.n_t != profile.n_t() || s.r_t != profile.r_t()) return "profile mismatch on " + canonical_string(t);
      }
    }
  return "";
}

std::string theorem() {
  const ViolationReport r = verify_theorem({1, 12, 4, 14});
  if (!r.pass()) return std::to_string(r.violations.size()) + " violations";
  if (r.corpus_size != 987 - 1) return "corpus size " + std::to_string(r.corpus_size);  // n = 1 has no edge
  std::vector<std::size_t> orders;
  for (const auto& n : r.details["equality_orders"]) orders.push_back(n.get<std::size_t>());
  std::vector<std::size_t> expected;
  for (std::size_t n = 2; n <= 12; ++n) expected.push_back(n);
  if (orders != expected) return "equality orders are not exactly 2..12";
  if (r.details["equality_trees"].get<std::size_t>() != 11) return "more than one equality tree per order";
  return "";
}

std::string inequalities() {
  ViolationReport universal = scan_corpus({1, 11,
                                           {InequalityId::I2_1, InequalityId::I2_2, InequalityId::I2_3,
                                            InequalityId::I2_4, InequalityId::I2_7, InequalityId::I2_8},
                                           RootScope::AllRoots, 4, 14});
  if (!universal.violations.empty()) return "universal inequality violated";
  ViolationReport excl =
      scan_corpus({1, 10, {InequalityId::I2_5, InequalityId::I2_6}, RootScope::DegreeAtLeastTwo, 4, 14});
  if (!excl.pass()) return "2.5/2.6 scan failed";
  if (margin(InequalityId::I2_5, subtree_stats(p22())).value != BigInt(-4)) return "P22 margin for 2.5 is not -4";
  std::set<std::string> hit;
  for (const auto& v : excl.violations) hit.insert(v.rooted);
  const auto list = exclusion_list();
  if (hit != std::set<std::string>(list.begin(), list.end())) return "violating classes differ from {P22, P23}";
  // Identity checks on every rooted tree up to 10.
  for (std::size_t n = 1; n <= 10; ++n)
    for (const Tree& t : all_trees(n))
      for (Vertex v = 0; v < n; ++v) {
        const SubtreeStats s = subtree_stats(t, v);
        const auto m = [&](InequalityId id) { return margin(id, s).value; };
        if (m(InequalityId::I2_2) + m(InequalityId::I2_8) != m(InequalityId::I2_4)) return "2.2 + 2.8 != 2.4";
        if (m(InequalityId::I2_1) != m(InequalityId::I2_2) + m(InequalityId::I2_3)) return "2.1 != 2.2 + 2.3";
      }
  return "";
}

std::string table_values() {
  struct Row {
    RootedTree a, b;
    Rational A, B, C, I, II, III;
  };
  const Row rows[] = {
      {p22(), p22(), frac(167, 6), 52, 20, 2, 12, 100},
      {p22(), p23(), frac(251, 6), 91, 30, frac(9, 2), frac(57, 2), frac(543, 2)},
      {p23(), p23(), frac(359, 6), 154, 44, 7, 55, 649},
  };
  for (const Row& r : rows) {
    const Coefficients k = coefficients(subtree_stats(r.a), subtree_stats(r.b));
    const Parts p = parts(k);
    if (k.a != r.A || k.b != r.B || k.c != r.C) return "coefficient mismatch";
    if (p.part_i != r.I || p.part_ii != r.II || p.part_iii != r.III) return "part mismatch";
  }
  if (!(subtree_stats(p22()) == SubtreeStats{4, 8, 6, 10})) return "P22 stats";
  if (!(subtree_stats(p23()) == SubtreeStats{6, 15, 10, 20})) return "P23 stats";
  return "";
}

std::string length_function() {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const RootedTree a = random_branching_side(rng, 8);
    const RootedTree b = random_branching_side(rng, 8);
    const Coefficients k = coefficients(subtree_stats(a), subtree_stats(b));
    for (std::size_t l = 0; l <= 20; ++l) {
      const Tree joined = join_by_path(a, b, l).tree;
      Rational direct = global_mean(joined);
      if (joined.order() <= oracle::kMaxOracleOrder) {
        const auto profile = oracle::enumerate_profile(joined);
        direct = Rational(profile.r_t(), profile.n_t());
      }
      if (mu_l(k, l) != direct) return "mu(l) mismatch at pair " + std::to_string(i) + ", l = " + std::to_string(l);
    }
    for (std::size_t l = 1; l <= 50; ++l)
      if (d_excess(k, l) != mu_l(k, l) - mu_l(k, l - 1) - frac(1, 3)) return "d(l) quotient mismatch";
  }
  return "";
}

// The 1e-4 bound is specific to P22/P22: for a general pair excess(1000) is
// about 4[I]/3 * 1e-6, so random pairs are held to positivity, monotone decay
// and l^2 * excess converging to 4[I]/3 instead.
std::string asymptotics() {
  const std::vector<std::size_t> ls{1, 10, 100, 1000};
  const auto base = asymptotic_scan(p22(), p22(), ls);
  if (!positive_and_decreasing(base)) return "P22/P22 series not positive and decreasing";
  if (!(base.back().excess < frac(1, 10000))) return "P22/P22 excess(1000) >= 1e-4";

  std::mt19937_64 rng(99);
  const std::vector<std::size_t> far{10000};
  for (int i = 0; i < 20; ++i) {
    const RootedTree a = random_branching_side(rng, 10);
    const RootedTree b = random_branching_side(rng, 10);
    if (!positive_and_decreasing(asymptotic_scan(a, b, ls))) return "random pair not positive and decreasing";
    const Rational limit = scaled_excess_limit(coefficients(subtree_stats(a), subtree_stats(b)));
    const Rational scaled = asymptotic_scan(a, b, far).front().scaled;
    Rational gap = (scaled - limit) / limit;
    if (gap.sign() < 0) gap = -gap;
    if (!(gap < frac(1, 20))) return "l^2 excess at l = 10^4 not within 5% of 4[I]/3";
  }
  return "";
}

std::string extremal() {
  const ExtremalResult r = extremal_family(100);
  if (r.ratio < frac(1, 20) || r.ratio > frac(1, 16)) return "ratio " + r.ratio.decimal(6) + " outside [1/20, 1/16]";
  return "";
}

std::string generator() {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (std::size_t n = 1; n <= 14; ++n)
    if (count_trees(n) != expected[n - 1]) return "count mismatch at n = " + std::to_string(n);
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<std::string> generated;
    for (const Tree& t : all_trees(n)) generated.insert(canonical_string(t));
    if (generated.size() != expected[n - 1]) return "duplicate classes at n = " + std::to_string(n);
    if (generated != testing::prufer_classes(n)) return "Pruefer classes differ at n = " + std::to_string(n);
  }
  return "";
}

std::string local_global() {
  const SubtreeStats one = subtree_stats(Tree::singleton(), 0);
  if (local_mean(one) != Rational(1) || global_mean(one) != Rational(1)) return "singleton means are not 1";
  for (std::size_t n = 2; n <= 10; ++n)
    for (const Tree& t : all_trees(n))
      for (Vertex v = 0; v < n; ++v) {
        const SubtreeStats s = subtree_stats(t, v);
        if (!(local_mean(s) > global_mean(s))) return "local <= global on " + canonical_string(t);
        const Rational gap_bound = (Rational(s.n_t, s.n_v) - Rational(1)) / Rational(3);
        if (local_mean(s) - global_mean(s) < gap_bound) return "local - global bound fails on " + canonical_string(t);
        if (mean_without_vertex(s) > Rational(s.n_v + 1) / Rational(3))
          return "mean without v bound fails on " + canonical_string(t);
      }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 engine equals oracle, n <= 9", oracle_equality, 60},
      {"2 contraction difference >= 1/3, n <= 12", theorem, 120},
      {"3 inequality scans and identities", inequalities},
      {"4 exceptional coefficient table", table_values},
      {"5 length function on 200 random pairs", length_function},
      {"6 asymptotic decay", asymptotics, 10},
      {"7 extremal ratio at n = 100", extremal},
      {"8 generator counts and Pruefer cross-check", generator},
      {"9 local mean bounds, n <= 10", local_global},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string reason;
    const auto started = std::chrono::steady_clock::now();
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (reason.empty() && c.limit_s > 0 && elapsed > c.limit_s) reason = "over the runtime limit";
    if (reason.empty()) {
      std::printf("PASS  %s (%.1f s)\n", c.name.c_str(), elapsed);
    } else {
      ++failures;
      std::printf("FAIL  %s: %s\n", c.name.c_str(), reason.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
