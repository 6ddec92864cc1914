#include <doctest.h>

#include "mst/inequalities.hpp"
#include "mst/treegen.hpp"

using namespace mst;

namespace {

std::vector<InequalityId> universal() {
  return {InequalityId::I2_1, InequalityId::I2_2, InequalityId::I2_3,
          InequalityId::I2_4,    InequalityId::I2_7, InequalityId::I2_8};
}

}  // namespace

TEST_CASE("labels round-trip") {
  for (InequalityId id : kAllInequalities) CHECK(parse_inequality(label(id)) == id);
  CHECK_THROWS(parse_inequality("2.9"));
  CHECK(has_exclusions(InequalityId::I2_5));
  CHECK(has_exclusions(InequalityId::I2_6));
  CHECK_FALSE(has_exclusions(InequalityId::I2_7));
}

TEST_CASE("margins on the exceptional rooted trees") {
  const SubtreeStats p22s{4, 8, 6, 10};
  const SubtreeStats p23s{6, 15, 10, 20};
  CHECK(margin(InequalityId::I2_5, p22s).value == -4);
  CHECK_FALSE(margin(InequalityId::I2_5, p22s).satisfied());
  CHECK(margin(InequalityId::I2_6, p22s).value == 0);
  CHECK_FALSE(margin(InequalityId::I2_6, p22s).satisfied());  // strict
  CHECK(margin(InequalityId::I2_5, p23s).value == -3);
  CHECK(margin(InequalityId::I2_6, p23s).value == 10);
  CHECK(margin(InequalityId::I2_6, p23s).satisfied());
  CHECK(margin(InequalityId::I2_6, p23s).relation == Relation::Positive);
  CHECK(margin(InequalityId::I2_1, p23s).relation == Relation::NonNegative);
}

TEST_CASE("equality cases on paths rooted at a leaf") {
  for (std::size_t n = 1; n <= 15; ++n) {
    const SubtreeStats s = subtree_stats(path(n), 0);
    CHECK(margin(InequalityId::I2_1, s).value == 0);
    CHECK(margin(InequalityId::I2_2, s).value == 0);
    CHECK(margin(InequalityId::I2_8, s).value == 0);
  }
  // Equality in 2.1 forces a path rooted at a leaf.
  for (std::size_t n = 2; n <= 9; ++n)
    for (const Tree& t : all_trees(n))
      for (Vertex v = 0; v < n; ++v) {
        const bool leaf_of_path = t.is_path() && t.degree(v) == 1;
        CHECK((margin(InequalityId::I2_1, subtree_stats(t, v)).value == 0) == leaf_of_path);
        CHECK((margin(InequalityId::I2_2, subtree_stats(t, v)).value == 0) == leaf_of_path);
      }
}

TEST_CASE("margin identities") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const Tree& t : all_trees(n))
      for (Vertex v = 0; v < n; ++v) {
        const SubtreeStats s = subtree_stats(t, v);
        const BigInt m21 = margin(InequalityId::I2_1, s).value;
        const BigInt m22 = margin(InequalityId::I2_2, s).value;
        CHECK(m22 + margin(InequalityId::I2_8, s).value == margin(InequalityId::I2_4, s).value);
        CHECK(m21 == m22 + (s.r_v - s.n_t));
        CHECK(m21 >= m22);
      }
}

TEST_CASE("scan_corpus: universal inequalities hold") {
  ViolationReport r = scan_corpus({1, 10, universal(), RootScope::AllRoots, 3, 14});
  CHECK(r.violations.empty());
  CHECK(r.pass());
  CHECK(r.corpus_size == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  CHECK(r.details["identity_failures"] == 0);
}

TEST_CASE("scan_corpus: exclusions are exactly P22 and P23") {
  ViolationReport r = scan_corpus(
      {1, 10, {InequalityId::I2_5, InequalityId::I2_6}, RootScope::DegreeAtLeastTwo, 2, 14});
  CHECK(r.pass());
  CHECK(r.unexpected() == 0);
  CHECK(r.missing_exclusions.empty());
  REQUIRE(r.violations.size() == 3);  // 2.5 on both, 2.6 on P22 only
  std::set<std::string> classes;
  for (const auto& v : r.violations) {
    CHECK(v.expected);
    classes.insert(v.rooted);
  }
  CHECK(classes == exclusion_list());
  CHECK(r.details["violated_rooted_classes"]["2.6"].size() == 1);
  // Outside the exclusions the root count exceeds 6.
  CHECK(BigInt(r.details["min_nv_non_exceptional"].get<std::string>()) > 6);
}

TEST_CASE("scan_corpus: excluded inequalities fail elsewhere without the degree scope") {
  ViolationReport r = scan_corpus({1, 6, {InequalityId::I2_5}, RootScope::AllRoots, 1, 14});
  CHECK(r.unexpected() > 0);
  CHECK_FALSE(r.pass());
}

TEST_CASE("scan_corpus: missing exclusions fail the match") {
  // 2.6 alone never fails on P23, so the pair cannot be matched.
  ViolationReport r = scan_corpus({1, 8, {InequalityId::I2_6}, RootScope::DegreeAtLeastTwo, 1, 14});
  CHECK(r.unexpected() == 0);
  CHECK(r.missing_exclusions == std::vector<std::string>{rooted_canonical_string(p23())});
  CHECK_FALSE(r.pass());
  // A corpus too small to contain P23 needs only P22.
  ViolationReport small = scan_corpus({1, 3, {InequalityId::I2_6}, RootScope::DegreeAtLeastTwo, 1, 14});
  CHECK(small.pass());
}

TEST_CASE("scan_corpus: singleton corpus") {
  std::vector<InequalityId> universal, restricted;
  for (InequalityId id : kAllInequalities) (has_exclusions(id) ? restricted : universal).push_back(id);
  ViolationReport r = scan_corpus({1, 1, universal, RootScope::AllRoots, 1, 14});
  CHECK(r.violations.empty());
  CHECK(r.cases == 1);
  // No vertex of degree two, so nothing to check and no exclusion expected.
  ViolationReport d = scan_corpus({1, 1, restricted, RootScope::DegreeAtLeastTwo, 1, 14});
  CHECK(d.pass());
  CHECK(d.violations.empty());
}

TEST_CASE("scan_corpus is deterministic across shard counts") {
  auto ids = std::vector<InequalityId>{InequalityId::I2_5, InequalityId::I2_6};
  auto a = emit_report(scan_corpus({1, 9, ids, RootScope::DegreeAtLeastTwo, 1, 14}), ReportFormat::Json, false);
  auto b = emit_report(scan_corpus({1, 9, ids, RootScope::DegreeAtLeastTwo, 4, 14}), ReportFormat::Json, false);
  CHECK(a == b);
}

TEST_CASE("scan budget") {
  CHECK_THROWS_AS(scan_corpus({1, 15, universal(), RootScope::AllRoots, 1, 14}), BudgetError);
}
