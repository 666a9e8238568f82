#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cactiq/bigint.hpp"
#include "cactiq/graph.hpp"
#include "cactiq/polynomial.hpp"

namespace cactiq {

/// A(G): 0/1 adjacency matrix.
template <typename Scalar = double>
DenseMatrix<Scalar> adjacency(const Graph& g) {
  const int n = g.order();
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Constant(n, n, Scalar(0));
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = Scalar(1);
    a(v, u) = Scalar(1);
  }
  return a;
}

/// Q(G) = diag(G) + A(G), the signless Laplacian.
template <typename Scalar = double>
DenseMatrix<Scalar> signless_laplacian(const Graph& g) {
  DenseMatrix<Scalar> q = adjacency<Scalar>(g);
  for (int v = 0; v < g.order(); ++v) q(v, v) = Scalar(g.degree(v));
  return q;
}

/// Thrown when QL iteration fails to deflate within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

template <typename Scalar>
struct SymmetricEigen {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;  // ascending
  DenseMatrix<Scalar> vectors;                      // columns match values
  int iterations = 0;
};

namespace detail {

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m) {
  using std::abs;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  const auto n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace detail

/// Householder tridiagonalization followed by implicit-shift QL with
/// accumulated eigenvectors. Deflation threshold is `tolerance` relative to
/// the local diagonal scale; the total sweep count is capped at 10^4 * n.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> symmetric_eigen(const Eigen::MatrixBase<Derived>& input,
                                                         typename Derived::Scalar tolerance = 1e-12) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::hypot;
  using std::sqrt;
  detail::require_symmetric(input);
  const int n = static_cast<int>(input.rows());
  DenseMatrix<Scalar> z = input;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d(n), e(n);
  SymmetricEigen<Scalar> out;
  if (n == 0) return out;

  // Householder reduction to tridiagonal form (accumulating transforms in z).
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    Scalar h(0), scale(0);
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += abs(z(i, k));
      if (scale == Scalar(0)) {
        e(i) = z(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        Scalar f = z(i, l);
        Scalar g = f >= 0 ? -sqrt(h) : sqrt(h);
        e(i) = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          z(j, i) = z(i, j) / h;
          g = 0;
          for (int k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (int k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e(j) = g / h;
          f += e(j) * z(i, j);
        }
        const Scalar hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z(i, j);
          e(j) = g = e(j) - hh * f;
          for (int k = 0; k <= j; ++k) z(j, k) -= (f * e(k) + g * z(i, k));
        }
      }
    } else {
      e(i) = z(i, l);
    }
    d(i) = h;
  }
  d(0) = 0;
  e(0) = 0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d(i) != Scalar(0)) {
      for (int j = 0; j <= l; ++j) {
        Scalar g(0);
        for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
        for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d(i) = z(i, i);
    z(i, i) = 1;
    for (int j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0;
  }

  // Implicit QL on the tridiagonal (d, e).
  for (int i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = 0;
  const long cap = 10000L * n;
  long sweeps = 0;
  for (int l = 0; l < n; ++l) {
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const Scalar dd = abs(d(m)) + abs(d(m + 1));
        if (abs(e(m)) <= tolerance * dd || abs(e(m)) == Scalar(0)) break;
      }
      if (m == l) break;
      if (++sweeps > cap) {
        throw ConvergenceError("QL iteration did not converge", static_cast<double>(abs(e(l))));
      }
      Scalar g = (d(l + 1) - d(l)) / (2 * e(l));
      Scalar r = hypot(g, Scalar(1));
      g = d(m) - d(l) + e(l) / (g + (g >= 0 ? r : -r));
      Scalar s(1), c(1), p(0);
      int i = m - 1;
      for (; i >= l; --i) {
        Scalar f = s * e(i);
        const Scalar b = c * e(i);
        r = hypot(f, g);
        e(i + 1) = r;
        if (r == Scalar(0)) {
          d(i + 1) -= p;
          e(m) = 0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + 2 * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
        for (int k = 0; k < n; ++k) {
          f = z(k, i + 1);
          z(k, i + 1) = s * z(k, i) + c * f;
          z(k, i) = c * z(k, i) - s * f;
        }
      }
      if (r == Scalar(0) && i >= l) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = 0;
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d(a) < d(b); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values(i) = d(order[i]);
    out.vectors.col(i) = z.col(order[i]);
  }
  out.iterations = static_cast<int>(sweeps);
  return out;
}

/// Radius q, unit Perron vector, residual and QL sweep count.
struct SpectralResult {
  double radius = 0.0;
  Eigen::VectorXd perron;
  double residual = 0.0;
  int iterations = 0;
};

/// Largest eigenvalue with its unit eigenvector, oriented to have a
/// nonnegative coordinate sum. Throws ConvergenceError if the residual
/// ||M x - q x|| exceeds `residual_tolerance`.
SpectralResult spectral_radius(const Eigen::MatrixXd& m, double residual_tolerance = 1e-9);

inline SpectralResult spectral_radius(const Graph& g, double residual_tolerance = 1e-9) {
  return spectral_radius(signless_laplacian<double>(g), residual_tolerance);
}

/// Ascending eigenvalues of a symmetric matrix.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m);

/// det(xI - M) for a square integer matrix, by Faddeev-LeVerrier in exact
/// arithmetic.
IntPolynomial char_poly(const IntMatrix& m);

/// Same, for a real matrix whose entries must all be integers; anything else
/// throws std::invalid_argument.
IntPolynomial char_poly(const Eigen::MatrixXd& m);

inline IntPolynomial char_poly(const Graph& g) { return char_poly(signless_laplacian<BigInt>(g)); }

/// Exact integer view of a real matrix. Throws for non-integer entries.
IntMatrix to_integer_matrix(const Eigen::MatrixXd& m);

}  // namespace cactiq
