#include "cactiq/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace cactiq {

namespace {

constexpr int kRefineBits = 64;

BigInt shifted(const BigInt& x, int bits) { return bits == 0 ? x : BigInt(x << bits); }

// Canonical form: odd numerator or exp == 0.
Dyadic reduced(Dyadic d) {
  while (d.exp > 0 && d.num != 0 && (d.num & 1) == 0) {
    d.num >>= 1;
    --d.exp;
  }
  if (d.num == 0) d.exp = 0;
  return d;
}

}  // namespace

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite bound");
  if (x == 0.0) return {};
  int e = 0;
  const double mant = std::frexp(x, &e);  // x = mant * 2^e, 0.5 <= |mant| < 1
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Dyadic d{BigInt(scaled), 0};
  const int shift = e - 53;
  if (shift >= 0) {
    d.num = shifted(d.num, shift);
  } else {
    d.exp = -shift;
  }
  return reduced(d);
}

double Dyadic::to_double() const {
  // Keep enough bits for correct rounding without overflowing the conversion.
  BigInt n = num;
  int e = exp;
  const auto bits = static_cast<int>(boost::multiprecision::msb(boost::multiprecision::abs(n) + 1));
  if (bits > 900) {
    n >>= bits - 900;
    e -= bits - 900;
  }
  return std::ldexp(n.convert_to<double>(), -e);
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp, b.exp);
  BigInt sum = shifted(a.num, e - a.exp) + shifted(b.num, e - b.exp);
  return reduced(Dyadic{std::move(sum), e + 1});
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp, b.exp);
  const BigInt l = shifted(a.num, e - a.exp);
  const BigInt r = shifted(b.num, e - b.exp);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int sign_at(const IntPolynomial& p, const Dyadic& x) {
  // 2^(exp*deg) * p(num / 2^exp) = sum a_i num^i 2^(exp*(deg-i)), computed by
  // Horner in the homogenized form.
  const auto& c = p.coefficients();
  if (c.empty()) return 0;
  const int deg = static_cast<int>(c.size()) - 1;
  BigInt acc = 0;
  for (int i = deg; i >= 0; --i) acc = acc * x.num + shifted(c[i], x.exp * (deg - i));
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("Sturm sequence needs a nonconstant polynomial");
  IntPolynomial sf = p.divide_exact(gcd(p, p.derivative()));
  if (sf.leading() < 0) sf = -sf;
  chain_.push_back(sf);
  chain_.push_back(sf.derivative().primitive());
  while (chain_.back().degree() > 0) {
    const IntPolynomial& f = chain_[chain_.size() - 2];
    const IntPolynomial& g = chain_.back();
    IntPolynomial r = f.pseudo_remainder(g);
    const int delta = f.degree() - g.degree() + 1;
    if (g.leading() < 0 && delta % 2 == 1) r = -r;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
  }
}

int SturmSequence::variations(const Dyadic& x) const {
  int changes = 0, last = 0;
  for (const auto& f : chain_) {
    const int s = sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Dyadic& a, const Dyadic& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

Dyadic root_bound(const IntPolynomial& p) {
  BigInt top = 0;
  const BigInt lead = boost::multiprecision::abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    BigInt q = boost::multiprecision::abs(p.coefficient(i));
    q = (q + lead - 1) / lead;
    if (q > top) top = q;
  }
  return Dyadic{top + 2, 0};
}

namespace {

bool narrow_enough(const RootBracket& r) {
  // hi - lo <= 2^-kRefineBits
  const int e = std::max(r.lo.exp, r.hi.exp);
  const BigInt width = shifted(r.hi.num, e - r.hi.exp) - shifted(r.lo.num, e - r.lo.exp);
  return e >= kRefineBits && width <= shifted(BigInt(1), e - kRefineBits);
}

// Bisects (lo, hi] toward the largest root it contains.
RootBracket refine_top(const SturmSequence& s, RootBracket r) {
  while (!narrow_enough(r)) {
    Dyadic mid = midpoint(r.lo, r.hi);
    if (s.count(mid, r.hi) >= 1) {
      r.lo = std::move(mid);
    } else {
      r.hi = std::move(mid);
    }
  }
  return r;
}

// One bisection step toward the top root.
void step_top(const SturmSequence& s, RootBracket& r) {
  Dyadic mid = midpoint(r.lo, r.hi);
  if (s.count(mid, r.hi) >= 1) {
    r.lo = std::move(mid);
  } else {
    r.hi = std::move(mid);
  }
}

// Bracket (lo, hi] for the largest root in (lo, hi], or nullopt.
std::optional<RootBracket> top_bracket(const SturmSequence& s, const Dyadic& lo, const Dyadic& hi) {
  if (s.count(lo, hi) == 0) return std::nullopt;
  return RootBracket{lo, hi};
}

void isolate_all(const SturmSequence& s, const Dyadic& lo, const Dyadic& hi, std::vector<double>& out) {
  const int c = s.count(lo, hi);
  if (c == 0) return;
  RootBracket r{lo, hi};
  if (c == 1) {
    out.push_back(refine_top(s, r).hi.to_double());
    return;
  }
  const Dyadic mid = midpoint(lo, hi);
  isolate_all(s, lo, mid, out);
  isolate_all(s, mid, hi, out);
}

}  // namespace

double largest_real_root(const IntPolynomial& p, double lo, double hi) {
  if (p.degree() < 1) throw std::invalid_argument("largest_real_root needs a nonconstant polynomial");
  if (!(lo <= hi)) throw std::invalid_argument("empty bracket");
  const SturmSequence s(p);
  const Dyadic a = Dyadic::from_double(lo);
  const Dyadic b = Dyadic::from_double(hi);
  if (auto r = top_bracket(s, a, b)) return refine_top(s, *r).hi.to_double();
  if (sign_at(p, a) == 0) return lo;
  throw std::domain_error("no real root in bracket");
}

double largest_real_root(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("largest_real_root needs a nonconstant polynomial");
  const Dyadic bound = root_bound(p);
  const Dyadic neg{-bound.num, 0};
  const SturmSequence s(p);
  if (auto r = top_bracket(s, neg, bound)) return refine_top(s, *r).hi.to_double();
  throw std::domain_error("polynomial has no real root");
}

std::strong_ordering compare_largest_roots(const IntPolynomial& p, const IntPolynomial& q) {
  const SturmSequence sp(p), sq(q);
  const Dyadic bp = root_bound(p), bq = root_bound(q);
  const Dyadic bound = bp > bq ? bp : bq;
  const Dyadic neg{-bound.num, 0};
  auto rp = top_bracket(sp, neg, bound);
  auto rq = top_bracket(sq, neg, bound);
  if (!rp || !rq) throw std::domain_error("polynomial has no real root");

  // The tops coincide exactly when both equal the largest real root of the
  // gcd; every common root is a root of the gcd.
  const IntPolynomial g = gcd(p, q);
  if (g.degree() >= 1) {
    const SturmSequence sg(g);
    if (auto rg = top_bracket(sg, neg, bound)) {
      // Shrink until the bracket isolates the gcd's top root for both p and q.
      RootBracket r = *rg;
      while (sg.count(r.lo, r.hi) > 1 || sp.count(r.lo, r.hi) > 1 || sq.count(r.lo, r.hi) > 1) step_top(sg, r);
      if (sp.count(r.hi, bound) == 0 && sq.count(r.hi, bound) == 0) return std::strong_ordering::equal;
    }
  }
  while (true) {
    if (rp->lo >= rq->hi) return std::strong_ordering::greater;
    if (rq->lo >= rp->hi) return std::strong_ordering::less;
    step_top(sp, *rp);
    step_top(sq, *rq);
  }
}

std::vector<std::pair<double, int>> real_roots(const IntPolynomial& p) {
  std::vector<std::pair<double, int>> out;
  if (p.degree() < 1) return out;
  for (const auto& [factor, mult] : squarefree_factors(p)) {
    const SturmSequence s(factor);
    const Dyadic bound = root_bound(factor);
    std::vector<double> roots;
    isolate_all(s, Dyadic{-bound.num, 0}, bound, roots);
    for (double r : roots) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cactiq
