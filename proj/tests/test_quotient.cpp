#include <cmath>
#include <random>

#include "doctest.h"

#include "cactiq/families.hpp"
#include "cactiq/quotient.hpp"
#include "cactiq/spectra.hpp"
#include "oracles.hpp"

using namespace cactiq;

namespace {

const Graph kC3 = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
const Graph kP3 = from_edges(3, {{0, 1}, {1, 2}});

SpectrumMultiset dense_spectrum(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd ev = oracle::eigenvalues(m);
  return SpectrumMultiset::cluster(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

BlockSpec random_spec(std::mt19937_64& rng) {
  auto small = [&] { return static_cast<double>(static_cast<int>(rng() % 7) - 3); };
  const int t = 1 + static_cast<int>(rng() % 4);
  std::vector<int> sizes;
  std::vector<double> l, p;
  for (int i = 0; i < t; ++i) {
    sizes.push_back(1 + static_cast<int>(rng() % 5));
    l.push_back(small());
    p.push_back(small());
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(t, t);
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) s(i, j) = s(j, i) = small();
  }
  return BlockSpec(sizes, l, p, s);
}

}  // namespace

TEST_CASE("quotient matrix examples") {
  const Eigen::MatrixXd qc3 = signless_laplacian(kC3);
  CHECK(quotient_matrix(qc3, IndexPartition({{0, 1, 2}}, 3)) == Eigen::MatrixXd::Constant(1, 1, 4.0));
  Eigen::MatrixXd expect(2, 2);
  expect << 2, 2, 1, 3;
  CHECK(quotient_matrix(qc3, IndexPartition({{0}, {1, 2}}, 3)) == expect);
  expect << 1, 1, 0.5, 2.5;  // b_10 = (1 + 0) / 2
  CHECK(quotient_matrix(signless_laplacian(kP3), IndexPartition({{0}, {1, 2}}, 3)) == expect);
  CHECK_THROWS_AS(quotient_matrix(qc3, IndexPartition({{0}, {1}}, 2)), std::invalid_argument);
}

TEST_CASE("malformed partitions are rejected") {
  CHECK_THROWS_AS(IndexPartition({{0}, {}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(IndexPartition({{0, 1}, {1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(IndexPartition({{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(IndexPartition({{0, 3}}, 2), std::invalid_argument);
}

TEST_CASE("equitable partitions") {
  CHECK(is_equitable(signless_laplacian(kC3), IndexPartition({{0}, {1, 2}}, 3)));
  CHECK_FALSE(is_equitable(signless_laplacian(kP3), IndexPartition({{0}, {1, 2}}, 3)));
  Eigen::MatrixXd m = Eigen::MatrixXd::Random(5, 5);
  CHECK(is_equitable(m, IndexPartition({{0}, {1}, {2}, {3}, {4}}, 5)));
}

TEST_CASE("block spec construction") {
  const BlockSpec one({2}, {1}, {1}, Eigen::MatrixXd::Zero(1, 1));
  Eigen::MatrixXd expect(2, 2);
  expect << 2, 1, 1, 2;
  CHECK(build_from_spec(one) == expect);
  const auto spec = structured_spectrum(one);
  REQUIRE(spec.entries.size() == 2);
  CHECK(spec.entries[0].value == doctest::Approx(1));
  CHECK(spec.entries[1].value == doctest::Approx(3));

  Eigen::MatrixXd s(2, 2);
  s << 0, 1, 1, 0;
  const BlockSpec c3({1, 2}, {0, 1}, {2, 1}, s);
  CHECK(build_from_spec(c3) == signless_laplacian(kC3));

  s << 0, 1, 2, 0;
  CHECK_THROWS_AS(BlockSpec({1, 2}, {0, 1}, {2, 1}, s), std::invalid_argument);
  CHECK_THROWS_AS(BlockSpec({0}, {0}, {0}, Eigen::MatrixXd::Zero(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(BlockSpec({1, 1}, {0}, {0, 0}, Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("block spec JSON round trip") {
  std::mt19937_64 rng(8);
  const BlockSpec spec = random_spec(rng);
  const auto j = to_json(spec);
  CHECK(j.contains("sizes"));
  const BlockSpec back = block_spec_from_json(j);
  CHECK(build_from_spec(back) == build_from_spec(spec));
}

TEST_CASE("family block specs reproduce the family matrices") {
  for (int s = 0; s <= 3; ++s) {
    for (int k = 0; k <= 3; ++k) {
      if (s + k == 0) continue;
      const BlockSpec h = hub_block_spec(s, k);
      REQUIRE(build_from_spec(h) == signless_laplacian(build_H(s, k)));
      REQUIRE(spectra_match(structured_spectrum(h), dense_spectrum(build_from_spec(h))));
      REQUIRE(structured_char_poly(h) == char_poly(build_H(s, k)));
      if (k >= 1) {
        const BlockSpec l = path_block_spec(s, k);
        REQUIRE(build_from_spec(l) == signless_laplacian(build_L(s, k)));
        REQUIRE(spectra_match(structured_spectrum(l), dense_spectrum(build_from_spec(l))));
        REQUIRE(structured_char_poly(l) == char_poly(build_L(s, k)));
      }
    }
  }
}

TEST_CASE("hub structure contributes 1 and 3 with the closed-form multiplicities") {
  for (int s = 1; s <= 4; ++s) {
    for (int k = 1; k <= 4; ++k) {  // k = 0 makes 1 a root of the cubic as well
      const int n = 2 * s + k + 1;
      const BlockSpec spec = hub_block_spec(s, k);
      const QuotientMatrix b = spec_quotient(spec);
      const Eigen::VectorXd qv = quotient_eigenvalues(b, spec.sizes());
      std::vector<double> values(qv.data(), qv.data() + qv.size());
      for (int i = 0; i < spec.blocks(); ++i) values.insert(values.end(), spec.sizes()[i] - 1, spec.p()[i]);
      const auto ms = SpectrumMultiset::cluster(values);
      int ones = 0, threes = 0;
      for (const auto& e : ms.entries) {
        if (std::abs(e.value - 1) < 1e-8) ones = e.multiplicity;
        if (std::abs(e.value - 3) < 1e-8) threes = e.multiplicity;
      }
      REQUIRE(ones == (n + k - 3) / 2);
      REQUIRE(threes == (n - k - 3) / 2);
    }
  }
}

TEST_CASE("quotient eigenvalues are eigenvalues of the matrix (random equitable pairs)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const BlockSpec spec = random_spec(rng);
    const Eigen::MatrixXd m = build_from_spec(spec);
    const QuotientMatrix b = quotient_matrix(m, spec.partition());
    REQUIRE(is_equitable(m, spec.partition()));
    REQUIRE((b - spec_quotient(spec)).cwiseAbs().maxCoeff() < 1e-12);
    const Eigen::VectorXd full = oracle::eigenvalues(m);
    for (double lambda : quotient_eigenvalues(b, spec.sizes())) {
      REQUIRE((full.array() - lambda).abs().minCoeff() < 1e-8);
    }
  }
}

TEST_CASE("structured spectrum matches dense spectrum on random specs") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const BlockSpec spec = random_spec(rng);
    const auto structured = structured_spectrum(spec);
    REQUIRE(structured.total() == spec.order());
    REQUIRE(spectra_match(structured, dense_spectrum(build_from_spec(spec))));
    REQUIRE(structured_char_poly(spec) == char_poly(build_from_spec(spec)));
  }
}

TEST_CASE("spectrum clustering") {
  const auto ms = SpectrumMultiset::cluster({3.0, 1.0, 1.0 + 1e-9, 3.0 - 1e-9, 2.0});
  REQUIRE(ms.entries.size() == 3);
  CHECK(ms.entries[0].multiplicity == 2);
  CHECK(ms.entries[1].multiplicity == 1);
  CHECK(ms.entries[2].multiplicity == 2);
  CHECK(ms.total() == 5);
  CHECK(ms.expanded().size() == 5);
}
