#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"

#include "cactiq/polynomial.hpp"
#include "cactiq/sturm.hpp"

using namespace cactiq;

namespace {

IntPolynomial from_roots(const std::vector<long long>& roots) {
  IntPolynomial p{1};
  for (long long r : roots) p *= IntPolynomial::linear(r);
  return p;
}

}  // namespace

TEST_CASE("arithmetic and normalization") {
  const IntPolynomial a{-4, 9, -6, 1};
  CHECK(a.degree() == 3);
  CHECK(a.is_monic());
  CHECK(a.str() == "x^3 - 6x^2 + 9x - 4");
  CHECK(a == IntPolynomial::linear(4) * IntPolynomial::linear(1).pow(2));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK((a + IntPolynomial{4}).coefficient(0) == 0);
  CHECK(a.derivative() == IntPolynomial{9, -12, 3});
  CHECK(a(BigInt(4)) == 0);
  CHECK(a(2.0) == doctest::Approx(-2.0));
  CHECK(IntPolynomial::monomial(3, 2).str() == "2x^3");
  CHECK(IntPolynomial{-1}.str() == "-1");
}

TEST_CASE("exact division") {
  const IntPolynomial p = from_roots({1, 3, 3, -2});
  CHECK(p.divide_exact(IntPolynomial::linear(3)) == from_roots({1, 3, -2}));
  CHECK_THROWS_AS(p.divide_exact(IntPolynomial::linear(5)), std::domain_error);
  const IntPolynomial odd{1, 1};
  CHECK_THROWS_AS(odd.divide_exact(IntPolynomial{1, 2}), std::domain_error);
}

TEST_CASE("gcd and square-free factors") {
  const IntPolynomial p = from_roots({1, 1, 2, 5, 5, 5});
  const IntPolynomial q = from_roots({1, 5, 7});
  CHECK(gcd(p, q) == from_roots({1, 5}));
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{3, 6}) == IntPolynomial{1, 2});
  const auto f = squarefree_factors(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(from_roots({2}), 1));
  CHECK(f[1] == std::make_pair(from_roots({1}), 2));
  CHECK(f[2] == std::make_pair(from_roots({5}), 3));
}

TEST_CASE("json round trip keeps big coefficients") {
  IntPolynomial p = IntPolynomial::linear(7).pow(40);
  const auto j = to_json(p);
  CHECK(j.front() == p.coefficient(0).str());
  CHECK(polynomial_from_json(j) == p);
  CHECK_THROWS(polynomial_from_json(nlohmann::json::array({"1", "x"})));
}

TEST_CASE("dyadic arithmetic and exact signs") {
  CHECK(Dyadic::from_double(0.75).num == 3);
  CHECK(Dyadic::from_double(0.75).exp == 2);
  CHECK(Dyadic::from_double(-2.5).to_double() == -2.5);
  CHECK(midpoint(Dyadic::from_double(1), Dyadic::from_double(2)).to_double() == 1.5);
  CHECK(Dyadic::from_double(0.5) < Dyadic::from_double(0.75));
  const IntPolynomial p{-4, 9, -6, 1};
  CHECK(sign_at(p, Dyadic::from_double(4)) == 0);
  CHECK(sign_at(p, Dyadic::from_double(4.5)) == 1);
  CHECK(sign_at(p, Dyadic::from_double(2.5)) == -1);
}

TEST_CASE("Sturm counts distinct roots") {
  const IntPolynomial p = from_roots({-3, 1, 1, 2, 4, 4, 4});
  const SturmSequence s(p);
  auto d = [](double x) { return Dyadic::from_double(x); };
  CHECK(s.count(d(-10), d(10)) == 4);
  CHECK(s.count(d(1), d(4)) == 2);  // (1, 4]
  CHECK(s.count(d(0.5), d(1)) == 1);
  CHECK(s.count(d(4), d(9)) == 0);
  CHECK(SturmSequence(IntPolynomial{1, 0, 1}).count(d(-100), d(100)) == 0);
}

TEST_CASE("largest real root examples") {
  CHECK(largest_real_root(IntPolynomial::linear(4), 0, 10) == 4.0);
  CHECK(largest_real_root(IntPolynomial{8, -7, 1}, 3, 10) == doctest::Approx((7 + std::sqrt(17.0)) / 2).epsilon(1e-15));
  CHECK(largest_real_root(IntPolynomial{8, -7, 1}) == doctest::Approx((7 + std::sqrt(17.0)) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(largest_real_root(IntPolynomial{-2, 0, 1}, 0, 1), std::domain_error);
  CHECK_THROWS_AS(largest_real_root(IntPolynomial{5}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(largest_real_root(IntPolynomial{1, 0, 1}), std::domain_error);
  CHECK(largest_real_root(IntPolynomial::linear(2), 2, 3) == 2.0);
  CHECK(largest_real_root(from_roots({1, 2, 6}), 0, 5) == 2.0);
  CHECK(largest_real_root(IntPolynomial{-2, 0, 1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("exact comparison of largest roots") {
  const IntPolynomial a{8, -7, 1};          // (7 + sqrt 17) / 2
  const IntPolynomial b = from_roots({5});  // 5
  CHECK(compare_largest_roots(a, b) == std::strong_ordering::greater);
  CHECK(compare_largest_roots(b, a) == std::strong_ordering::less);
  CHECK(compare_largest_roots(a, a * from_roots({1, 1})) == std::strong_ordering::equal);
  // sqrt 2 vs a rational just above it: gap about 1e-12
  const IntPolynomial sqrt2{-2, 0, 1};
  const IntPolynomial near{-1414213562374, 1000000000000};
  CHECK(compare_largest_roots(sqrt2, near) == std::strong_ordering::less);
  // Two polynomials sharing the top root through different factors.
  CHECK(compare_largest_roots(sqrt2 * from_roots({-7}), sqrt2 * IntPolynomial{1, 0, 1}) == std::strong_ordering::equal);
}

TEST_CASE("real roots with multiplicity") {
  const auto r = real_roots(from_roots({-3, 1, 1, 4, 4, 4}) * IntPolynomial{1, 0, 1});
  REQUIRE(r.size() == 3);
  CHECK(r[0].first == doctest::Approx(-3));
  CHECK(r[0].second == 1);
  CHECK(r[1].first == doctest::Approx(1));
  CHECK(r[1].second == 2);
  CHECK(r[2].first == doctest::Approx(4));
  CHECK(r[2].second == 3);
}

TEST_CASE("random products of linear factors recover their roots") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> roots;
    const int d = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < d; ++i) roots.push_back(static_cast<long long>(rng() % 21) - 10);
    const IntPolynomial p = from_roots(roots);
    const double top = static_cast<double>(*std::max_element(roots.begin(), roots.end()));
    REQUIRE(largest_real_root(p) == doctest::Approx(top).epsilon(1e-12));
    int total = 0;
    for (const auto& [value, mult] : real_roots(p)) total += mult;
    REQUIRE(total == d);
  }
}
