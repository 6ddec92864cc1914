#include <doctest.h>

#include <map>
#include <set>

#include "mst/treegen.hpp"
#include "support/brute.hpp"

using namespace mst;

TEST_CASE("all_trees counts") {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) CHECK(count_trees(n) == expected[n - 1]);
  CHECK(count_trees(13) == 1301);
  CHECK(count_trees(14) == 3159);
}

TEST_CASE("small orders by hand") {
  auto one = all_trees(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].order() == 1);

  auto four = all_trees(4);
  REQUIRE(four.size() == 2);
  std::set<std::string> classes{canonical_string(four[0]), canonical_string(four[1])};
  CHECK(classes == std::set<std::string>{canonical_string(path(4)), canonical_string(star(3).tree)});
}

TEST_CASE("generator matches the Prüfer dedup oracle class for class") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> generated;
    for (const Tree& t : all_trees(n)) {
      CHECK(t.order() == n);
      CHECK(generated.insert(canonical_string(t)).second);  // no duplicates
    }
    CHECK(generated == testing::prufer_classes(n));
  }
}

TEST_CASE("no duplicate classes up to order 14") {
  for (std::size_t n = 9; n <= 14; ++n) {
    std::set<std::string> seen;
    for (const Tree& t : all_trees(n)) CHECK(seen.insert(canonical_string(t)).second);
  }
}

TEST_CASE("iterator ranges partition the corpus") {
  const std::size_t total = count_trees(11);
  std::vector<std::string> whole;
  for (const Tree& t : all_trees(11)) whole.push_back(format_tree(t));
  std::vector<std::string> stitched;
  for (std::size_t k = 0; k < 4; ++k)
    for (const Tree& t : tree_range(11, k * total / 4, (k + 1) * total / 4)) stitched.push_back(format_tree(t));
  CHECK(stitched == whole);

  TreeIterator it(9);
  CHECK(it.skip(10) == 10);
  CHECK(it.position() == 10);
  auto eleventh = it.next();
  REQUIRE(eleventh);
  CHECK(format_tree(*eleventh) == format_tree(all_trees(9)[10]));
}

TEST_CASE("generation budget") {
  CHECK_THROWS_AS(TreeIterator(0), BudgetError);
  CHECK_THROWS_AS(TreeIterator(15), BudgetError);
  CHECK_THROWS_AS(TreeIterator(8, 7), BudgetError);
  CHECK_NOTHROW(TreeIterator(16, 16));
}

TEST_CASE("random_tree") {
  CHECK(random_tree(1, 42).order() == 1);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    Tree t = random_tree(2, seed);
    CHECK(t.order() == 2);
    CHECK(t.has_edge({0, 1}));
  }
  Tree a = random_tree(30, 7);
  Tree b = random_tree(30, 7);
  CHECK(std::vector<Edge>(a.edges().begin(), a.edges().end()) == std::vector<Edge>(b.edges().begin(), b.edges().end()));
  CHECK(format_tree(random_tree(30, 8)) != format_tree(a));

  // All 16 labeled trees on 4 vertices show up with roughly equal frequency.
  std::map<std::string, int> seen;
  for (std::uint64_t seed = 0; seed < 3200; ++seed) ++seen[format_tree(random_tree(4, seed))];
  CHECK(seen.size() == 16);
  for (const auto& [tree, count] : seen) {
    CHECK(count > 100);
    CHECK(count < 300);
  }
}

TEST_CASE("prufer_decode") {
  Tree star_tree = prufer_decode(std::vector<std::size_t>{0, 0, 0}, 5);
  CHECK(star_tree.degree(0) == 4);
  Tree p = prufer_decode(std::vector<std::size_t>{1, 2}, 4);
  CHECK(p.is_path());
}
