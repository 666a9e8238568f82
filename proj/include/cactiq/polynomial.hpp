#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cactiq/bigint.hpp"

namespace cactiq {

/// Exact univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no coefficients
/// and degree -1; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial constant(BigInt c);
  /// x - root
  static IntPolynomial linear(long long root);
  static IntPolynomial monomial(int degree, BigInt c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(int e) const;
  IntPolynomial derivative() const;

  /// Exact division. Throws std::domain_error if the remainder is nonzero or
  /// the quotient has non-integer coefficients.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
  IntPolynomial pseudo_remainder(const IntPolynomial& g) const;

  BigInt content() const;
  /// Divides out the content; the sign of the leading coefficient is kept.
  IntPolynomial primitive() const;

  BigInt operator()(const BigInt& x) const;
  double operator()(double x) const;

  /// Lowest degree at which the two polynomials differ, or -1 if equal.
  friend int first_difference(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, e.g. "x^3 - 6x^2 + 9x - 4".
  std::string str() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Greatest common divisor up to a constant; the result is primitive with a
/// positive leading coefficient (1 for coprime inputs).
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

/// Square-free factorization p = c * prod f_i^i. Returns (f_i, i) with
/// nonconstant f_i.
std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p);

/// JSON array of decimal coefficient strings, ascending degree.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace cactiq
