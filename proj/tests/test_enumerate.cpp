#include <cstdlib>

#include "doctest.h"

#include "cactiq/canonical.hpp"
#include "cactiq/enumerate.hpp"
#include "cactiq/families.hpp"
#include "oracles.hpp"

using namespace cactiq;

TEST_CASE("small enumerations") {
  const auto three = enumerate_cacti(3);
  REQUIRE(three.size() == 2);
  CHECK(std::any_of(three.begin(), three.end(),
                    [](const Graph& g) { return is_isomorphic(g, from_edges(3, {{0, 1}, {1, 2}})); }));
  CHECK(std::any_of(three.begin(), three.end(), [](const Graph& g) { return is_isomorphic(g, build_H(1, 0)); }));
  CHECK(count_cacti(1) == 1);
  CHECK(count_cacti(3) == 2);
  CHECK(count_cacti(4) == 4);
  CHECK(count_cacti(5, {.matching = 1}) == 1);

  const auto five = enumerate_cacti(5, {.matching = 2});
  for (const Graph& target : {build_H(2, 0), build_H(1, 2)}) {
    CHECK(std::any_of(five.begin(), five.end(), [&](const Graph& g) { return is_isomorphic(g, target); }));
  }
}

TEST_CASE("known class counts up to n = 10") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 23, 63, 188, 596, 1979};
  for (int n = 1; n <= 10; ++n) REQUIRE(count_cacti(n) == expected[n - 1]);
}

TEST_CASE("enumeration matches the edge-subset oracle for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto mine = enumerate_cacti(n);
    const auto ref = oracle::cacti_by_subsets(n);
    REQUIRE(mine.size() == ref.size());
    for (const Graph& r : ref) {
      const auto hits = std::count_if(mine.begin(), mine.end(), [&](const Graph& g) { return oracle::isomorphic(g, r); });
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("output is sorted, duplicate-free and filter-sound") {
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_cacti(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(is_cactus(all[i]));
      if (i > 0) REQUIRE(canonical_code(all[i - 1]) < canonical_code(all[i]));
    }
    std::size_t by_matching = 0;
    for (int m = 1; 2 * m <= n; ++m) {
      const auto part = enumerate_cacti(n, {.matching = m});
      for (const Graph& g : part) REQUIRE(matching_number(g).size == m);
      by_matching += part.size();
    }
    if (n >= 2) REQUIRE(by_matching == all.size());
    std::size_t by_pendants = 0;
    for (int k = 0; k < n; ++k) {
      const auto part = enumerate_cacti(n, {.pendants = k});
      for (const Graph& g : part) REQUIRE(pendant_count(g) == k);
      by_pendants += part.size();
    }
    if (n >= 3) REQUIRE(by_pendants == all.size());
  }
}

TEST_CASE("infeasible filters give empty output; guards reject") {
  CHECK(enumerate_cacti(5, {.matching = 3}).empty());
  CHECK(enumerate_cacti(5, {.matching = 0}).empty());
  CHECK(enumerate_cacti(5, {.pendants = 5}).empty());
  CHECK(enumerate_cacti(3, {.pendants = 1}).empty());
  CHECK_THROWS_AS(enumerate_cacti(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cacti(11), std::invalid_argument);
  CHECK(count_cacti(11, {}, {.max_order = 11}) > 1979);
}

TEST_CASE("result does not depend on the worker count") {
  const auto one = enumerate_cacti(8, {}, {.threads = 1});
  const auto many = enumerate_cacti(8, {}, {.threads = 7});
  CHECK(one == many);
}
