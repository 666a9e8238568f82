#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cactiq/graph.hpp"

namespace cactiq {

enum class Claim {
  Theorem31i,           // n = 2m+1: maximizer H_m^0
  Theorem31ii,          // n >= 2m+2: maximizer H_{m-1}^{n-2m+1}
  Theorem32,            // unconstrained maximizer by parity of n
  Prop213,              // exactly k pendant vertices
  Prop215,              // perfect matching, n = 2m
  Conjecture11Negative, // the bound (5 + sqrt(4n-3))/2 is exceeded
  Formulas,
  Monotonicity,
};

std::string_view claim_name(Claim c);
/// Throws std::invalid_argument for an unknown id.
Claim parse_claim(std::string_view id);

struct Counterexample {
  std::string description;
  std::string graph6;  // empty when no single graph is involved
};

struct VerificationReport {
  Claim claim;
  std::optional<int> n, m, k;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string observed_maximizer;   // graph6, canonical labeling
  std::string predicted_maximizer;  // graph6, canonical labeling
  std::optional<double> observed_radius;
  std::optional<double> predicted_radius;
  std::optional<double> runner_up_gap;
  bool pass = false;
  std::vector<Counterexample> counterexamples;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// One compact JSON object per line.
void write_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports);

struct VerifyOptions {
  int max_order = 10;
  int threads = 0;
};

/// Numeric agreement required between observed and predicted radii.
inline constexpr double kRadiusTolerance = 1e-9;
/// Radius gaps below this are settled by exact root comparison.
inline constexpr double kExactGap = 1e-7;

struct Ranking {
  std::size_t top = 0;
  std::optional<std::size_t> runner_up;
  bool exact_used = false;         // some candidate was within kExactGap of the top
  std::vector<std::size_t> tied;   // candidates whose top root equals the maximum exactly
};

/// Argmax of `radii`. Numeric ties go to the lower index; every candidate
/// within kExactGap of the numeric top is re-ranked by exact comparison of
/// the largest roots of the characteristic polynomials.
Ranking rank_by_radius(const std::vector<Graph>& graphs, const std::vector<double>& radii);

/// Exhaustively checks an extremal claim over the cacti on n vertices.
/// Needs m for Theorem31i/Theorem31ii/Prop215/Conjecture11Negative and k for
/// Prop213. Throws std::invalid_argument for an inapplicable combination, an
/// empty constrained class, or n above the enumeration guard.
VerificationReport verify_extremal(Claim claim, int n, std::optional<int> m = {}, std::optional<int> k = {},
                                   const VerifyOptions& options = {});

/// Closed-form characteristic polynomials against exact determinants for all
/// valid parameters with n <= max_n (3 <= max_n <= 24), plus the documented
/// disagreement of the superseded forms.
VerificationReport verify_formulas(int max_n = 24);

/// Seeded random trials of the three monotonicity facts: neighbor shift with
/// x_v <= x_u raises q; contracting a non-pendant edge with disjoint
/// neighborhoods and adding a pendant raises q; proper subgraphs of a
/// connected graph have smaller q. Each property runs `trials` comparisons.
VerificationReport verify_monotonicity(int trials, std::uint64_t seed, const VerifyOptions& options = {});

/// Strict-increase margin required by verify_monotonicity.
inline constexpr double kMonotonicityMargin = 1e-10;

}  // namespace cactiq
