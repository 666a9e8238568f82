#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "cactiq/polynomial.hpp"

namespace cactiq {

/// Exact dyadic rational num / 2^exp with exp >= 0.
struct Dyadic {
  BigInt num = 0;
  int exp = 0;

  static Dyadic from_double(double x);
  double to_double() const;

  friend Dyadic midpoint(const Dyadic& a, const Dyadic& b);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }
};

/// Sign (-1, 0, +1) of p at an exact dyadic point.
int sign_at(const IntPolynomial& p, const Dyadic& x);

/// Sturm chain of the square-free part of a polynomial. Scaled by positive
/// constants only, so sign variations are those of the classical chain.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  const std::vector<IntPolynomial>& chain() const { return chain_; }
  int variations(const Dyadic& x) const;
  /// Distinct real roots in the half-open interval (a, b].
  int count(const Dyadic& a, const Dyadic& b) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Half-open interval (lo, hi] known to contain a root.
struct RootBracket {
  Dyadic lo;
  Dyadic hi;
};

/// Integer B with every real root of p strictly inside (-B, B).
Dyadic root_bound(const IntPolynomial& p);

/// Largest real root of p within the closed interval [lo, hi], refined by
/// Sturm-certified bisection to about 2^-64. Throws std::invalid_argument
/// for a constant polynomial and std::domain_error when [lo, hi] holds no
/// root.
double largest_real_root(const IntPolynomial& p, double lo, double hi);

/// Largest real root over the whole line. Throws std::domain_error if p has
/// no real root.
double largest_real_root(const IntPolynomial& p);

/// Exact comparison of the largest real roots of two polynomials.
std::strong_ordering compare_largest_roots(const IntPolynomial& p, const IntPolynomial& q);

/// Real roots with multiplicity, ascending.
std::vector<std::pair<double, int>> real_roots(const IntPolynomial& p);

}  // namespace cactiq
