#pragma once

#include <variant>

#include "json.hpp"

#include "cactiq/graph.hpp"
#include "cactiq/polynomial.hpp"
#include "cactiq/quotient.hpp"

namespace cactiq {

// Vertex numbering shared by both families: v0 = 0 is the hub, triangle i
// is {0, 2i+1, 2i+2}. H_s^k then has pendants 2s+1..2s+k. L_s^k has the
// length-2 path 0 - (2s+1) - (2s+2) followed by k-1 pendants 2s+3..2s+k+1.

enum class Family { H, L };

struct FamilyParams {
  Family family;
  int s;
  int k;

  int order() const { return family == Family::H ? 2 * s + k + 1 : 2 * s + k + 2; }
};

/// s triangles and k pendant edges at a hub. Requires s, k >= 0 and
/// s + k >= 1.
Graph build_H(int s, int k);

/// s triangles, k-1 pendant edges and one pendant path of length 2 at a hub.
/// Requires s >= 0, k >= 1.
Graph build_L(int s, int k);

Graph build(const FamilyParams& p);

/// x^3 - (n+3)x^2 + 3nx - 2n + 2k + 2
IntPolynomial hub_cubic(int n, int k);

/// x^5 - (n+5)x^4 + (6n+4)x^3 - (12n-2k-10)x^2 + (9n-6k-12)x - 2n + 2k + 4
IntPolynomial path_quintic(int n, int k);

/// Closed-form signless characteristic polynomial of H_s^k with n = 2s+k+1.
/// Needs n >= 3, 0 <= k < n, n - k odd. For s = 0 the (x-3) factor has
/// exponent -1 and is divided out exactly.
IntPolynomial psi_H(int n, int k);

/// Closed-form signless characteristic polynomial of L_s^k with n = 2s+k+2.
/// Needs k >= 1, n >= k + 2, n - k even and n + k >= 6. For s = 0 the (x-3)
/// exponent is -1 and is divided out exactly.
IntPolynomial psi_L(int n, int k);

/// The superseded cubic x^3 - (k+6)x^2 - (n-4k-12)x + n - k - 7.
IntPolynomial legacy_hub_cubic(int n, int k);

/// The superseded quintic h(x).
IntPolynomial legacy_path_quintic(int n, int k);

/// Superseded closed forms: the same prefactors with the legacy cubic or
/// quintic. Same parameter checks as psi_H / psi_L.
IntPolynomial psi_legacy(Family family, int n, int k);

/// Block structure of Q(H_s^k): hub, s triangle pairs, then the pendant block
/// (omitted when k = 0).
BlockSpec hub_block_spec(int s, int k);

/// Block structure of Q(L_s^k): hub, triangle pairs, path middle, path end,
/// then the pendant block (omitted when k = 1).
BlockSpec path_block_spec(int s, int k);

/// (a + sqrt(b)) / c with integers a, b >= 0, c > 0.
struct ClosedForm {
  long long a;
  long long b;
  long long c;

  double value() const;
};

/// Largest real root of `poly` inside [lo, hi].
struct PolyRoot {
  IntPolynomial poly;
  double lo;
  double hi;

  double value() const;
};

using RadiusDescriptor = std::variant<ClosedForm, PolyRoot>;

double radius_value(const RadiusDescriptor& d);
nlohmann::json to_json(const RadiusDescriptor& d);

struct MatchingConstraint {
  int m;
};
struct PendantConstraint {
  int k;
};
struct Unconstrained {};

using Constraint = std::variant<MatchingConstraint, PendantConstraint, Unconstrained>;

struct ExtremalAnswer {
  Graph maximizer;
  FamilyParams params;
  RadiusDescriptor descriptor;
  double radius;
};

/// Predicted maximizer and radius over cacti on n vertices with the given
/// constraint. Throws std::invalid_argument for infeasible or unsupported
/// constraints (m outside 1..n/2, k outside 0..n-1, k = 0 with n even, or
/// n = 3 with k = 1).
ExtremalAnswer extremal_answer(int n, const Constraint& constraint);

/// The bound (5 + sqrt(4n-3)) / 2 from the superseded conjecture for
/// n = 2m + 1.
ClosedForm superseded_odd_bound(int n);

}  // namespace cactiq
