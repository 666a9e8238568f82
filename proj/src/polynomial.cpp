#include "cactiq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactiq {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::linear(long long root) { return IntPolynomial{-root, 1}; }

IntPolynomial IntPolynomial::monomial(int degree, BigInt c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  return (i >= 0 && i <= degree()) ? coeffs_[i] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial exponent");
  IntPolynomial result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<BigInt> quot(degree() - dd + 1, BigInt(0));
  for (int k = degree() - dd; k >= 0; --k) {
    const BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (top % divisor.leading() != 0) throw std::domain_error("inexact polynomial division");
    BigInt q = top / divisor.leading();
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw std::domain_error("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& g) const {
  if (g.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  if (degree() < g.degree()) return *this;
  int steps = degree() - g.degree() + 1;
  IntPolynomial r = *this;
  const IntPolynomial lc = constant(g.leading());
  while (!r.is_zero() && r.degree() >= g.degree()) {
    IntPolynomial t = monomial(r.degree() - g.degree(), r.leading());
    r = lc * r - t * g;
    --steps;
  }
  if (steps > 0) r *= lc.pow(steps);
  return r;
}

BigInt IntPolynomial::content() const {
  BigInt c = 0;
  for (const auto& a : coeffs_) c = boost::multiprecision::gcd(c, a);
  return boost::multiprecision::abs(c);
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  const BigInt c = content();
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / c;
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

int first_difference(const IntPolynomial& a, const IntPolynomial& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = 0; i <= top; ++i) {
    if (a.coefficient(i) != b.coefficient(i)) return i;
  }
  return -1;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = boost::multiprecision::abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (a.is_zero()) return {};
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_remainder(b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const IntPolynomial prim = p.primitive();
  const IntPolynomial a0 = gcd(prim, prim.derivative());
  IntPolynomial b = prim.divide_exact(a0);
  IntPolynomial c = prim.derivative().divide_exact(a0);
  IntPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    IntPolynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = b.divide_exact(a);
    c = d.divide_exact(a);
    d = c - b.derivative();
  }
  return out;
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& item : j) {
    if (!item.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
    const auto s = item.get<std::string>();
    const std::size_t start = s.starts_with("-") ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("invalid decimal coefficient '" + s + "'");
    }
    coeffs.emplace_back(s);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cactiq
