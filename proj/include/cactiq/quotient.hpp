#pragma once

#include <vector>

#include <Eigen/Core>

#include "json.hpp"

#include "cactiq/polynomial.hpp"

namespace cactiq {

/// Eigenvalues with multiplicities, strictly increasing by value.
struct SpectrumMultiset {
  struct Entry {
    double value;
    int multiplicity;
  };
  std::vector<Entry> entries;

  int total() const;
  /// Groups values closer than `tolerance` (single-linkage on sorted values);
  /// each cluster is represented by its mean.
  static SpectrumMultiset cluster(std::vector<double> values, double tolerance = 1e-6);
  /// Flattened, ascending, each value repeated by its multiplicity.
  std::vector<double> expanded() const;
};

/// Same multiplicity pattern and every paired value within `tolerance`.
bool spectra_match(const SpectrumMultiset& a, const SpectrumMultiset& b, double tolerance = 1e-8);

/// Ordered partition of 0..n-1 into nonempty disjoint blocks.
class IndexPartition {
 public:
  /// Throws std::invalid_argument for empty, overlapping or non-covering
  /// blocks.
  IndexPartition(std::vector<std::vector<int>> blocks, int order);

  int order() const { return order_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  int order_;
};

using QuotientMatrix = Eigen::MatrixXd;

/// b_ij = (sum of block M_ij) / n_i. Defined for any partition, equitable or
/// not. Throws if the partition order differs from the matrix order.
QuotientMatrix quotient_matrix(const Eigen::MatrixXd& m, const IndexPartition& part);

/// Every block M_ij has constant row sums.
bool is_equitable(const Eigen::MatrixXd& m, const IndexPartition& part, double tolerance = 1e-9);

/// Spectrum of the quotient of a symmetric matrix under an equitable
/// partition, via the symmetric similarity D^(1/2) B D^(-1/2).
Eigen::VectorXd quotient_eigenvalues(const QuotientMatrix& b, const std::vector<int>& sizes);

/// Block-constant symmetric matrix: diagonal blocks l_i J + p_i I of size
/// n_i, off-diagonal blocks s_ij J.
class BlockSpec {
 public:
  /// Throws std::invalid_argument on size mismatch, n_i < 1, or s_ij != s_ji.
  /// Diagonal entries of `s` are ignored.
  BlockSpec(std::vector<int> sizes, std::vector<double> l, std::vector<double> p,
            Eigen::MatrixXd s);

  int blocks() const { return static_cast<int>(sizes_.size()); }
  int order() const;
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<double>& l() const { return l_; }
  const std::vector<double>& p() const { return p_; }
  const Eigen::MatrixXd& s() const { return s_; }

  /// True when every parameter is an integer.
  bool is_integral() const;

  /// The index partition matching the block layout.
  IndexPartition partition() const;

 private:
  std::vector<int> sizes_;
  std::vector<double> l_, p_;
  Eigen::MatrixXd s_;
};

Eigen::MatrixXd build_from_spec(const BlockSpec& spec);

/// The t x t quotient: b_ii = l_i n_i + p_i, b_ij = s_ij n_j.
QuotientMatrix spec_quotient(const BlockSpec& spec);

/// sigma(B) united with p_i of multiplicity n_i - 1 for every block.
SpectrumMultiset structured_spectrum(const BlockSpec& spec, double cluster_tolerance = 1e-6);

/// Exact counterpart: det(xI - B) * prod (x - p_i)^(n_i - 1). Requires an
/// integral spec (std::invalid_argument otherwise).
IntPolynomial structured_char_poly(const BlockSpec& spec);

nlohmann::json to_json(const BlockSpec& spec);
BlockSpec block_spec_from_json(const nlohmann::json& j);

}  // namespace cactiq
