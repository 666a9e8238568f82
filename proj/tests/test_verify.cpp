#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"

#include "cactiq/graph6.hpp"
#include "cactiq/canonical.hpp"
#include "cactiq/families.hpp"
#include "cactiq/verify.hpp"

using namespace cactiq;

TEST_CASE("claim ids round trip") {
  for (Claim c : {Claim::Theorem31i, Claim::Theorem31ii, Claim::Theorem32, Claim::Prop213, Claim::Prop215,
                  Claim::Conjecture11Negative, Claim::Formulas, Claim::Monotonicity}) {
    CHECK(parse_claim(claim_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_claim("lemma99"), std::invalid_argument);
}

TEST_CASE("odd perfect-matching claim at n = 5") {
  const auto r = verify_extremal(Claim::Theorem31i, 5, 2);
  CHECK(r.pass);
  CHECK(r.counterexamples.empty());
  CHECK(is_isomorphic(from_graph6(r.observed_maximizer), build_H(2, 0)));
  CHECK(std::abs(*r.observed_radius - (7 + std::sqrt(17.0)) / 2) <= kRadiusTolerance);
  CHECK(*r.runner_up_gap > 0);
}

TEST_CASE("cubic claim at n = 8, m = 3") {
  const auto r = verify_extremal(Claim::Theorem31ii, 8, 3);
  CHECK(r.pass);
  CHECK(is_isomorphic(from_graph6(r.observed_maximizer), build_H(2, 3)));
  CHECK(r.observed_maximizer == r.predicted_maximizer);
}

TEST_CASE("superseded bound is exceeded at n = 5") {
  const auto r = verify_extremal(Claim::Conjecture11Negative, 5, 2);
  CHECK(r.pass);
  CHECK(r.details.at("documented_discrepancy") == true);
  CHECK(*r.observed_radius > *r.predicted_radius);
  CHECK(r.details.at("excess").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("superseded bound is attained, not exceeded, at n = 3") {
  const auto r = verify_extremal(Claim::Conjecture11Negative, 3, 1);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.counterexamples.empty());
}

TEST_CASE("inapplicable combinations are rejected") {
  CHECK_THROWS_AS(verify_extremal(Claim::Theorem31i, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Theorem31i, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Theorem31ii, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Prop215, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Prop213, 6, std::nullopt, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Prop213, 3, std::nullopt, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Theorem32, 11), std::invalid_argument);
  CHECK_THROWS_AS(verify_extremal(Claim::Formulas, 5), std::invalid_argument);
}

TEST_CASE("unconstrained maximum is the best over matching numbers") {
  for (int n = 3; n <= 9; ++n) {
    const auto overall = verify_extremal(Claim::Theorem32, n);
    REQUIRE(overall.pass);
    double best = 0;
    std::string best_graph;
    for (int m = 1; 2 * m <= n; ++m) {
      const Claim c = n == 2 * m + 1 ? Claim::Theorem31i : n == 2 * m ? Claim::Prop215 : Claim::Theorem31ii;
      const auto r = verify_extremal(c, n, m);
      REQUIRE(r.pass);
      if (*r.observed_radius > best) {
        best = *r.observed_radius;
        best_graph = r.observed_maximizer;
      }
    }
    REQUIRE(best == *overall.observed_radius);
    REQUIRE(best_graph == overall.observed_maximizer);
  }
}

TEST_CASE("formula report") {
  const auto r = verify_formulas(24);
  CHECK(r.pass);
  CHECK(r.details.at("identity_failures") == 0);
  bool saw_5 = false;
  for (const auto& m : r.details.at("legacy_mismatches")) {
    if (m.at("family") == "H" && m.at("n") == 5) {
      saw_5 = true;
      CHECK(m.at("legacy_factor") == "x^3 - 6x^2 + 7x - 2");
      CHECK(m.at("current_factor") == "x^3 - 8x^2 + 15x - 8");
    }
    CHECK_FALSE((m.at("family") == "H" && m.at("n") == 3));
  }
  CHECK(saw_5);
  CHECK_THROWS_AS(verify_formulas(25), std::invalid_argument);
}

TEST_CASE("monotonicity report") {
  const auto r = verify_monotonicity(200, 42);
  CHECK(r.pass);
  for (const auto& p : r.details.at("properties")) {
    CHECK(p.at("comparisons") == 200);
    CHECK(p.at("violations") == 0);
    CHECK(p.at("min_margin").get<double>() > kMonotonicityMargin);
  }
  const auto smoke = verify_monotonicity(1, 9);
  CHECK(smoke.pass);
  CHECK(smoke.details.at("properties")[0].at("comparisons") == 1);
  CHECK_THROWS_AS(verify_monotonicity(0, 1), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  std::ostringstream a, b;
  write_jsonl(a, {verify_extremal(Claim::Theorem32, 8, {}, {}, {.threads = 1}), verify_monotonicity(50, 5)});
  write_jsonl(b, {verify_extremal(Claim::Theorem32, 8, {}, {}, {.threads = 6}), verify_monotonicity(50, 5)});
  const std::string text = a.str();
  CHECK(text == b.str());
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("pass implies no counterexamples") {
  const auto r = verify_extremal(Claim::Prop213, 7, std::nullopt, 2);
  CHECK(r.pass == r.counterexamples.empty());
  const auto j = r.to_json();
  CHECK(j.at("claim") == "prop213");
  CHECK(j.at("params").at("k") == 2);
}

TEST_CASE("ranking settles near ties exactly") {
  const Graph claw = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph triangle_plus_isolated = from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
  const Graph p4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});

  // Same signless spectrum {4, 1, 1, 0}: an exact tie is reported.
  const Ranking tie = rank_by_radius({claw, triangle_plus_isolated}, {4.0, 4.0});
  CHECK(tie.exact_used);
  CHECK(tie.top == 0);
  CHECK(tie.tied == std::vector<std::size_t>{1});

  // Misleading numeric values within the exact-comparison window: the exact
  // roots (2 + sqrt 2 vs 4) decide.
  const Ranking fixed = rank_by_radius({p4, claw}, {4.0 + 5e-8, 4.0});
  CHECK(fixed.exact_used);
  CHECK(fixed.top == 1);
  CHECK(fixed.tied.empty());
  CHECK(fixed.runner_up == std::optional<std::size_t>{0});

  const Ranking clear = rank_by_radius({p4, claw}, {3.41, 4.0});
  CHECK_FALSE(clear.exact_used);
  CHECK(clear.top == 1);
  CHECK_THROWS_AS(rank_by_radius({}, {}), std::invalid_argument);
}
