#include "mst/contraction.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>

#include "mst/inequalities.hpp"
#include "mst/treegen.hpp"

namespace mst {

namespace {

const Rational kThird(BigInt(1), BigInt(3));

Rational rat(std::size_t x) { return Rational(to_big(x)); }

Rational half(const Rational& x) { return x / Rational(2); }

std::string edge_site(Edge e) { return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v); }

// Runs `scan` over every free tree of order n_min..n_max, split into shards
// per order; partial reports are merged in shard order.
ViolationReport sharded(const CampaignOptions& options,
                        const std::function<ViolationReport(const std::vector<Tree>&)>& scan) {
  if (options.n_min < 1 || options.n_min > options.n_max)
    throw std::invalid_argument("campaign needs 1 <= n_min <= n_max");
  if (options.n_max > options.max_order)
    throw BudgetError("campaign order " + std::to_string(options.n_max) + " exceeds budget " +
                      std::to_string(options.max_order));
  const std::size_t shards = std::max<std::size_t>(1, options.shards);
  ViolationReport merged;
  for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
    const std::size_t total = count_trees(n, options.max_order);
    std::vector<ViolationReport> partial(shards);
    std::vector<std::thread> workers;
    for (std::size_t k = 0; k < shards; ++k)
      workers.emplace_back([&, k] {
        partial[k] = scan(tree_range(n, k * total / shards, (k + 1) * total / shards, options.max_order));
      });
    for (auto& w : workers) w.join();
    for (const auto& p : partial) merged.merge(p);
  }
  merged.corpus = "free trees, n = " + std::to_string(options.n_min) + ".." + std::to_string(options.n_max);
  return merged;
}

}  // namespace

ContractionReport contraction_difference(const Tree& t, Edge e) {
  const EdgeClass edge_class = classify_edge(t, e);
  const Tree contracted = contract_edge(t, e);
  ContractionReport report{.edge = e, .edge_class = edge_class};
  report.before = global_mean(t);
  report.after = global_mean(contracted);
  report.difference = report.before - report.after;
  report.excess = report.difference - kThird;
  return report;
}

Coefficients coefficients(const SubtreeStats& side1, const SubtreeStats& side2) {
  const BigInt& n1 = side1.n_v;
  const BigInt& r1 = side1.r_v;
  const BigInt& n2 = side2.n_v;
  const BigInt& r2 = side2.r_v;
  const Rational a = Rational(r1 + r2 + n1 * n2) - half(Rational(n1 + n2)) - Rational(BigInt(1), BigInt(6));
  const Rational b(n1 * r2 + n2 * r1 - n1 * n2 + side1.r_t + side2.r_t - r1 - r2);
  const Rational c(n1 * n2 + side1.n_t + side2.n_t - n1 - n2);
  const Rational d = Rational(n1 + n2) - Rational(BigInt(1), BigInt(2));
  return {a, b, c, d, n1, n2};
}

Rational mu_l(const Coefficients& k, std::size_t l) {
  const Rational x = rat(l);
  const Rational numerator =
      x * x * x / Rational(6) + half(Rational(k.n1 + k.n2)) * x * x + k.a * x + k.b;
  const Rational denominator = half(x * x) + k.d * x + k.c;
  return numerator / denominator;
}

Parts parts(const Coefficients& k) {
  const Rational sum(k.n1 + k.n2);
  return {
      half(k.c) - half(Rational(3) * k.a) + half((sum + Rational(1)) * k.d),
      half(k.c) * (sum + Rational(1)) - half(Rational(3) * k.b),
      Rational(3) * k.a * k.c - Rational(3) * k.b * k.d - k.c * k.c,
  };
}

Rational d_excess(const Coefficients& k, std::size_t l) {
  if (l < 1) throw std::invalid_argument("d_excess needs l >= 1");
  const Rational& a = k.a;
  const Rational& b = k.b;
  const Rational& c = k.c;
  const Rational& d = k.d;
  const Rational x = rat(l);
  const Rational pair = x * (x - Rational(1));  // l(l-1)
  const Rational odd = Rational(2) * x - Rational(1);
  const Rational quarter(BigInt(1), BigInt(4));
  const Rational lead = d / Rational(6) + quarter;

  const Rational numerator = (lead * d + c / Rational(6) - half(a)) * pair + (lead * c - half(b)) * odd + a * c -
                             b * d - c * c / Rational(3);
  const Rational denominator = quarter * pair * pair + half(d) * pair * odd + (d * d + c) * pair + d * c * odd +
                               c * c + half(c);
  return numerator / denominator;
}

Rational scaled_excess_limit(const Coefficients& k) { return Rational(4) * parts(k).part_i / Rational(3); }

BoundChain bound_chain(const SubtreeStats& side1, const SubtreeStats& side2) {
  const Parts p = parts(coefficients(side1, side2));
  const Rational nl(side1.n_t);
  const Rational nr(side2.n_t);
  return {
      Rational(2) * p.part_i >= nl + nr,
      Rational(2) * p.part_ii >= Rational(side2.n_v) * nl + Rational(side1.n_v) * nr,
      p.part_iii >= Rational(BigInt(3), BigInt(2)) * (nl * Rational(side2.r_v) + nr * Rational(side1.r_v)),
  };
}

ViolationReport verify_theorem(const CampaignOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  CampaignOptions effective = options;
  effective.n_min = std::max<std::size_t>(2, options.n_min);
  ViolationReport report;
  if (effective.n_min <= effective.n_max) {
    report = sharded(effective, [](const std::vector<Tree>& trees) {
      ViolationReport part;
      std::size_t internal = 0, equality = 0;
      std::optional<Rational> min_internal_excess;
      nlohmann::ordered_json equality_orders = nlohmann::ordered_json::array();
      for (const Tree& generated : trees) {
        const Tree t = canonical_tree(generated);
        const std::string tree_string = format_tree(t, ';');
        const Rational before = global_mean(t);
        const bool is_path = t.is_path();
        ++part.corpus_size;
        bool tree_has_equality = false;
        for (const Edge& e : t.edges()) {
          ++part.cases;
          const EdgeClass cls = classify_edge(t, e);
          const Rational difference = before - global_mean(contract_edge(t, e));
          const Rational excess = difference - kThird;
          auto flag = [&](const char* check) {
            part.violations.push_back(
                Violation{.tree = tree_string, .site = edge_site(e), .check = check, .value = difference.str()});
          };
          if (excess.sign() < 0) flag("lower-bound");
          if (excess.sign() == 0) {
            ++equality;
            tree_has_equality = true;
            if (!is_path) flag("equality-off-path");
          } else if (is_path) {
            flag("path-not-equal");
          }
          if (cls == EdgeClass::Internal) {
            ++internal;
            if (excess.sign() <= 0) flag("internal-strict");
            if (!min_internal_excess || excess < *min_internal_excess) min_internal_excess = excess;
          }
        }
        if (tree_has_equality) equality_orders.push_back(t.order());
      }
      part.details["internal_edges"] = internal;
      part.details["equality_cases"] = equality;
      part.details["equality_trees"] = equality_orders.size();
      part.details["equality_orders"] = equality_orders;
      part.details["min_internal_excess"] = min_internal_excess ? min_internal_excess->str() : std::string("none");
      return part;
    });
  }
  report.checks = {"theorem"};
  report.scope = "every edge";
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ViolationReport verify_parts(const CampaignOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  ViolationReport report = sharded(options, [](const std::vector<Tree>& trees) {
    ViolationReport part;
    std::size_t internal = 0, exceptional = 0;
    std::optional<BigInt> min_root_count;
    for (const Tree& generated : trees) {
      const Tree t = canonical_tree(generated);
      const std::string tree_string = format_tree(t, ';');
      ++part.corpus_size;
      for (const Edge& e : t.edges()) {
        if (classify_edge(t, e) != EdgeClass::Internal) continue;
        ++part.cases;
        ++internal;
        const InternalPathDecomposition path = internal_path_of(t, e);
        const SubtreeStats s1 = subtree_stats(path.side1);
        const SubtreeStats s2 = subtree_stats(path.side2);
        const Coefficients k = coefficients(s1, s2);
        auto flag = [&](const char* check, const std::string& value) {
          part.violations.push_back(Violation{.tree = tree_string, .site = edge_site(e), .check = check, .value = value});
        };

        const Rational direct = contraction_difference(t, e).difference;
        const Rational via_coefficients = d_excess(k, path.l) + kThird;
        if (direct != via_coefficients) flag("coefficient-route", via_coefficients.str());
        if (mu_l(k, path.l) != global_mean(t)) flag("mu-l", mu_l(k, path.l).str());

        const Parts p = parts(k);
        const bool side_exceptional = exclusion_list().contains(rooted_canonical_string(path.side1)) ||
                                      exclusion_list().contains(rooted_canonical_string(path.side2));
        if (side_exceptional) {
          ++exceptional;
          const Rational x = rat(path.l);
          const Rational combined = p.part_i * x * (x - Rational(1)) + p.part_ii * (Rational(2) * x - Rational(1)) +
                                    p.part_iii;
          if (combined.sign() <= 0) flag("parts-combined", combined.str());
          continue;
        }
        for (const BigInt& n : {s1.n_v, s2.n_v})
          if (!min_root_count || n < *min_root_count) min_root_count = n;
        if (p.part_i.sign() <= 0) flag("part-I", p.part_i.str());
        if (p.part_ii.sign() <= 0) flag("part-II", p.part_ii.str());
        if (p.part_iii.sign() <= 0) flag("part-III", p.part_iii.str());
        const BoundChain chain = bound_chain(s1, s2);
        if (!chain.part_i) flag("bound-I", p.part_i.str());
        if (!chain.part_ii) flag("bound-II", p.part_ii.str());
        if (!chain.part_iii) flag("bound-III", p.part_iii.str());
      }
    }
    part.details["internal_edges"] = internal;
    part.details["exceptional_side_cases"] = exceptional;
    part.details["min_side_root_count"] = min_root_count ? to_string(*min_root_count) : std::string("none");
    return part;
  });
  report.checks = {"parts"};
  report.scope = "internal edges";
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ExtremalResult extremal_family(std::size_t n) {
  Tree t = path_with_center_leaf(n);
  const Edge e = center_leaf_edge(n);
  const Rational difference = contraction_difference(t, e).difference;
  return {std::move(t), e, difference, difference / rat(n)};
}

ExtremalResult extremal_exhaustive(std::size_t n, std::size_t max_order) {
  if (n < 2) throw std::invalid_argument("extremal scan needs n >= 2");
  std::optional<ExtremalResult> best;
  TreeIterator it(n, max_order);
  while (auto generated = it.next()) {
    const Tree t = canonical_tree(*generated);
    const Rational before = global_mean(t);
    for (const Edge& e : t.edges()) {
      const Rational difference = before - global_mean(contract_edge(t, e));
      if (!best || difference > best->difference) best = ExtremalResult{t, e, difference, difference / rat(n)};
    }
  }
  return *best;
}

std::vector<AsymptoticPoint> asymptotic_scan(const RootedTree& side1, const RootedTree& side2,
                                             std::span<const std::size_t> l_values) {
  if (side1.root_degree() < 2 || side2.root_degree() < 2)
    throw std::invalid_argument("asymptotic scan needs both roots of degree >= 2");
  const Coefficients k = coefficients(subtree_stats(side1), subtree_stats(side2));
  std::vector<AsymptoticPoint> series;
  for (std::size_t i = 0; i < l_values.size(); ++i) {
    const std::size_t l = l_values[i];
    if (l < 1 || (i > 0 && l <= l_values[i - 1]))
      throw std::invalid_argument("l values must be positive and strictly ascending");
    const Rational excess = d_excess(k, l);
    series.push_back({l, excess, rat(l) * rat(l) * excess});
  }
  return series;
}

bool positive_and_decreasing(std::span<const AsymptoticPoint> series) {
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].excess.sign() <= 0) return false;
    if (i > 0 && !(series[i].excess < series[i - 1].excess)) return false;
  }
  return true;
}

}  // namespace mst
