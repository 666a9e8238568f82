#include "cactiq/spectra.hpp"

#include <cmath>

namespace cactiq {

SpectralResult spectral_radius(const Eigen::MatrixXd& m, double residual_tolerance) {
  if (m.rows() == 0) throw std::invalid_argument("empty matrix");
  const auto eig = symmetric_eigen(m);
  const Eigen::Index top = eig.values.size() - 1;
  SpectralResult out;
  out.radius = eig.values(top);
  out.perron = eig.vectors.col(top).normalized();
  if (out.perron.sum() < 0) out.perron = -out.perron;
  out.residual = (m * out.perron - out.radius * out.perron).norm();
  out.iterations = eig.iterations;
  if (!(out.residual <= residual_tolerance)) {
    throw ConvergenceError("eigenpair residual " + std::to_string(out.residual) +
                               " exceeds tolerance",
                           out.residual);
  }
  return out;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) { return symmetric_eigen(m).values; }

IntMatrix to_integer_matrix(const Eigen::MatrixXd& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v) || v != std::nearbyint(v) || std::abs(v) > 9.0e15) {
        throw std::invalid_argument("non-integer entry at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      out(i, j) = BigInt(static_cast<long long>(v));
    }
  }
  return out;
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  const auto n = static_cast<int>(a.rows());
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[n] = 1;
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  IntMatrix am = IntMatrix::Constant(n, n, BigInt(0));
  for (int k = 1; k <= n; ++k) {
    IntMatrix mk = am;
    mk.diagonal().array() += coeffs[n - k + 1];
    am = a * mk;
    const BigInt trace = am.trace();
    if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier produced an inexact trace");
    coeffs[n - k] = -(trace / k);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const Eigen::MatrixXd& m) { return char_poly(to_integer_matrix(m)); }

}  // namespace cactiq
