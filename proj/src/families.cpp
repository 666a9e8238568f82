#include "cactiq/families.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cactiq/sturm.hpp"

namespace cactiq {

namespace {

std::string params(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

// (x-1)^e1 (x-3)^e3 * core, with e3 = -1 meaning exact division by (x-3).
IntPolynomial assemble(int e1, int e3, const IntPolynomial& core) {
  IntPolynomial out = IntPolynomial::linear(1).pow(e1) * core;
  if (e3 >= 0) return out * IntPolynomial::linear(3).pow(e3);
  return out.divide_exact(IntPolynomial::linear(3));
}

void check_hub(int n, int k) {
  if (n < 3 || k < 0 || k >= n) throw std::invalid_argument("hub family needs n >= 3 and 0 <= k < n " + params(n, k));
  if ((n - k) % 2 == 0) throw std::invalid_argument("hub family needs n - k odd " + params(n, k));
}

void check_path(int n, int k) {
  if (k < 1 || n < k + 2) throw std::invalid_argument("path family needs k >= 1 and n >= k + 2 " + params(n, k));
  if ((n - k) % 2 != 0) throw std::invalid_argument("path family needs n - k even " + params(n, k));
  if (n + k < 6) {
    throw std::invalid_argument("path family exponent (n+k-6)/2 = " + std::to_string((n + k - 6) / 2) +
                                " is negative " + params(n, k));
  }
}

}  // namespace

Graph build_H(int s, int k) {
  if (s < 0 || k < 0) throw std::invalid_argument("build_H needs s, k >= 0");
  if (s + k == 0) throw std::invalid_argument("build_H(0, 0) is the single vertex; not a member of the family");
  const int n = 2 * s + k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    edges.insert(edges.end(), {{0, 2 * i + 1}, {0, 2 * i + 2}, {2 * i + 1, 2 * i + 2}});
  }
  for (int j = 0; j < k; ++j) edges.emplace_back(0, 2 * s + 1 + j);
  return from_edges(n, edges);
}

Graph build_L(int s, int k) {
  if (s < 0 || k < 1) throw std::invalid_argument("build_L needs s >= 0 and k >= 1");
  const int n = 2 * s + k + 2;
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    edges.insert(edges.end(), {{0, 2 * i + 1}, {0, 2 * i + 2}, {2 * i + 1, 2 * i + 2}});
  }
  edges.emplace_back(0, 2 * s + 1);
  edges.emplace_back(2 * s + 1, 2 * s + 2);
  for (int j = 0; j < k - 1; ++j) edges.emplace_back(0, 2 * s + 3 + j);
  return from_edges(n, edges);
}

Graph build(const FamilyParams& p) { return p.family == Family::H ? build_H(p.s, p.k) : build_L(p.s, p.k); }

IntPolynomial hub_cubic(int n, int k) { return IntPolynomial{-2LL * n + 2 * k + 2, 3LL * n, -(n + 3LL), 1}; }

IntPolynomial path_quintic(int n, int k) {
  return IntPolynomial{-2LL * n + 2 * k + 4, 9LL * n - 6 * k - 12, -(12LL * n - 2 * k - 10), 6LL * n + 4, -(n + 5LL), 1};
}

IntPolynomial psi_H(int n, int k) {
  check_hub(n, k);
  return assemble((n + k - 3) / 2, (n - k - 3) / 2, hub_cubic(n, k));
}

IntPolynomial psi_L(int n, int k) {
  check_path(n, k);
  return assemble((n + k - 6) / 2, (n - k - 4) / 2, path_quintic(n, k));
}

IntPolynomial legacy_hub_cubic(int n, int k) {
  return IntPolynomial{static_cast<long long>(n) - k - 7, -(static_cast<long long>(n) - 4 * k - 12), -(k + 6LL), 1};
}

IntPolynomial legacy_path_quintic(int n, int k) {
  return IntPolynomial{static_cast<long long>(n) - k - 8,
                       -(4LL * n - 7 * k - 40),
                       4LL * n - 14 * k - 54,
                       -(static_cast<long long>(n) - 7 * k - 32),
                       -(k + 9LL),
                       1};
}

IntPolynomial psi_legacy(Family family, int n, int k) {
  if (family == Family::H) {
    check_hub(n, k);
    return assemble((n + k - 3) / 2, (n - k - 3) / 2, legacy_hub_cubic(n, k));
  }
  check_path(n, k);
  return assemble((n + k - 6) / 2, (n - k - 4) / 2, legacy_path_quintic(n, k));
}

BlockSpec hub_block_spec(int s, int k) {
  if (s < 0 || k < 0 || s + k == 0) throw std::invalid_argument("hub_block_spec needs s, k >= 0 and s + k >= 1");
  const int n = 2 * s + k + 1;
  std::vector<int> sizes{1};
  std::vector<double> l{static_cast<double>(n - 2)}, p{1.0};
  for (int i = 0; i < s; ++i) {
    sizes.push_back(2);
    l.push_back(1.0);
    p.push_back(1.0);
  }
  if (k > 0) {
    sizes.push_back(k);
    l.push_back(0.0);
    p.push_back(1.0);
  }
  const auto t = static_cast<Eigen::Index>(sizes.size());
  Eigen::MatrixXd sm = Eigen::MatrixXd::Zero(t, t);
  sm.row(0).tail(t - 1).setOnes();
  sm.col(0).tail(t - 1).setOnes();
  return BlockSpec(std::move(sizes), std::move(l), std::move(p), std::move(sm));
}

BlockSpec path_block_spec(int s, int k) {
  if (s < 0 || k < 1) throw std::invalid_argument("path_block_spec needs s >= 0 and k >= 1");
  const int n = 2 * s + k + 2;
  std::vector<int> sizes{1};
  std::vector<double> l{static_cast<double>(n - 3)}, p{1.0};
  for (int i = 0; i < s; ++i) {
    sizes.push_back(2);
    l.push_back(1.0);
    p.push_back(1.0);
  }
  const int middle = static_cast<int>(sizes.size());
  sizes.insert(sizes.end(), {1, 1});
  l.insert(l.end(), {1.0, 0.0});
  p.insert(p.end(), {1.0, 1.0});
  if (k > 1) {
    sizes.push_back(k - 1);
    l.push_back(0.0);
    p.push_back(1.0);
  }
  const auto t = static_cast<Eigen::Index>(sizes.size());
  Eigen::MatrixXd sm = Eigen::MatrixXd::Zero(t, t);
  for (Eigen::Index j = 1; j < t; ++j) {
    if (j == middle + 1) continue;  // path end is not adjacent to the hub
    sm(0, j) = sm(j, 0) = 1.0;
  }
  sm(middle, middle + 1) = sm(middle + 1, middle) = 1.0;
  return BlockSpec(std::move(sizes), std::move(l), std::move(p), std::move(sm));
}

double ClosedForm::value() const {
  return (static_cast<double>(a) + std::sqrt(static_cast<double>(b))) / static_cast<double>(c);
}

double PolyRoot::value() const { return largest_real_root(poly, lo, hi); }

double radius_value(const RadiusDescriptor& d) {
  return std::visit([](const auto& x) { return x.value(); }, d);
}

nlohmann::json to_json(const RadiusDescriptor& d) {
  if (const auto* cf = std::get_if<ClosedForm>(&d)) return {{"closed_form", {cf->a, cf->b, cf->c}}};
  const auto& pr = std::get<PolyRoot>(d);
  return {{"poly", to_json(pr.poly)}, {"bracket", {pr.lo, pr.hi}}};
}

namespace {

ClosedForm odd_closed_form(int n) { return {n + 2LL, 1LL * n * n - 4LL * n + 12, 2}; }
ClosedForm even_closed_form(int n) { return {n + 1LL, 1LL * n * n - 2LL * n + 9, 2}; }

ExtremalAnswer hub_answer(int s, int k, RadiusDescriptor d) {
  ExtremalAnswer out{build_H(s, k), {Family::H, s, k}, std::move(d), 0.0};
  out.radius = radius_value(out.descriptor);
  return out;
}

}  // namespace

ExtremalAnswer extremal_answer(int n, const Constraint& constraint) {
  if (n < 3) throw std::invalid_argument("extremal_answer needs n >= 3");
  const double lo = 0.0, hi = 2.0 * n;
  if (const auto* mc = std::get_if<MatchingConstraint>(&constraint)) {
    const int m = mc->m;
    if (m < 1 || 2 * m > n) {
      throw std::invalid_argument("matching number " + std::to_string(m) + " infeasible for n = " + std::to_string(n));
    }
    if (n == 2 * m) return hub_answer(m - 1, 1, even_closed_form(n));
    if (n == 2 * m + 1) return hub_answer(m, 0, odd_closed_form(n));
    const int k = n - 2 * m + 1;
    return hub_answer(m - 1, k, PolyRoot{IntPolynomial{-4LL * m + 4, 3LL * n, -(n + 3LL), 1}, lo, hi});
  }
  if (const auto* pc = std::get_if<PendantConstraint>(&constraint)) {
    const int k = pc->k;
    if (k < 0 || k >= n) {
      throw std::invalid_argument("pendant count " + std::to_string(k) + " infeasible for n = " + std::to_string(n));
    }
    if ((n - k) % 2 == 1) return hub_answer((n - k - 1) / 2, k, PolyRoot{hub_cubic(n, k), lo, hi});
    if (k == 0) throw std::invalid_argument("no path-family member with k = 0 (n even)");
    // L_0^1 is P3, whose hub is itself pendant; no cactus on 3 vertices has one pendant.
    if (n == 3 && k == 1) throw std::invalid_argument("no cactus on 3 vertices has exactly 1 pendant vertex");
    const int s = (n - k - 2) / 2;
    ExtremalAnswer out{build_L(s, k), {Family::L, s, k}, PolyRoot{path_quintic(n, k), lo, hi}, 0.0};
    out.radius = radius_value(out.descriptor);
    return out;
  }
  if (n % 2 == 1) return hub_answer((n - 1) / 2, 0, odd_closed_form(n));
  return hub_answer(n / 2 - 1, 1, even_closed_form(n));
}

ClosedForm superseded_odd_bound(int n) { return {5, 4LL * n - 3, 2}; }

}  // namespace cactiq
