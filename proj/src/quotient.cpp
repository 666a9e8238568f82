#include "cactiq/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cactiq/spectra.hpp"

namespace cactiq {

int SpectrumMultiset::total() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

SpectrumMultiset SpectrumMultiset::cluster(std::vector<double> values, double tolerance) {
  std::sort(values.begin(), values.end());
  SpectrumMultiset out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] < tolerance) sum += values[j++];
    out.entries.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

std::vector<double> SpectrumMultiset::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

bool spectra_match(const SpectrumMultiset& a, const SpectrumMultiset& b, double tolerance) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
    if (std::abs(a.entries[i].value - b.entries[i].value) > tolerance) return false;
  }
  return true;
}

IndexPartition::IndexPartition(std::vector<std::vector<int>> blocks, int order)
    : blocks_(std::move(blocks)), order_(order) {
  std::vector<char> seen(order, 0);
  int covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("partition block " + std::to_string(b) + " is empty");
    for (int v : blocks_[b]) {
      if (v < 0 || v >= order) throw std::invalid_argument("partition index " + std::to_string(v) + " out of range");
      if (seen[v]) throw std::invalid_argument("partition index " + std::to_string(v) + " appears twice");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != order) throw std::invalid_argument("partition does not cover every index");
}

namespace {

void check_cover(const Eigen::MatrixXd& m, const IndexPartition& part) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (part.order() != m.rows()) {
    throw std::invalid_argument("partition covers " + std::to_string(part.order()) +
                                " indices but the matrix has order " + std::to_string(m.rows()));
  }
}

double block_row_sum(const Eigen::MatrixXd& m, int row, const std::vector<int>& cols) {
  double s = 0.0;
  for (int c : cols) s += m(row, c);
  return s;
}

}  // namespace

QuotientMatrix quotient_matrix(const Eigen::MatrixXd& m, const IndexPartition& part) {
  check_cover(m, part);
  const int t = part.size();
  QuotientMatrix b(t, t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      double total = 0.0;
      for (int r : part.block(i)) total += block_row_sum(m, r, part.block(j));
      b(i, j) = total / static_cast<double>(part.block(i).size());
    }
  }
  return b;
}

bool is_equitable(const Eigen::MatrixXd& m, const IndexPartition& part, double tolerance) {
  check_cover(m, part);
  for (const auto& rows : part.blocks()) {
    for (const auto& cols : part.blocks()) {
      const double first = block_row_sum(m, rows.front(), cols);
      for (int r : rows) {
        if (std::abs(block_row_sum(m, r, cols) - first) > tolerance) return false;
      }
    }
  }
  return true;
}

Eigen::VectorXd quotient_eigenvalues(const QuotientMatrix& b, const std::vector<int>& sizes) {
  const auto t = b.rows();
  if (b.cols() != t || static_cast<Eigen::Index>(sizes.size()) != t) {
    throw std::invalid_argument("quotient and block sizes disagree");
  }
  Eigen::MatrixXd sym(t, t);
  for (Eigen::Index i = 0; i < t; ++i) {
    for (Eigen::Index j = 0; j < t; ++j) {
      sym(i, j) = b(i, j) * std::sqrt(static_cast<double>(sizes[i]) / sizes[j]);
    }
  }
  // n_i b_ij = n_j b_ji for an equitable symmetric M; average out rounding.
  sym = (0.5 * (sym + sym.transpose())).eval();
  return eigenvalues(sym);
}

BlockSpec::BlockSpec(std::vector<int> sizes, std::vector<double> l, std::vector<double> p,
                     Eigen::MatrixXd s)
    : sizes_(std::move(sizes)), l_(std::move(l)), p_(std::move(p)), s_(std::move(s)) {
  const auto t = static_cast<Eigen::Index>(sizes_.size());
  if (t == 0) throw std::invalid_argument("BlockSpec needs at least one block");
  if (static_cast<Eigen::Index>(l_.size()) != t || static_cast<Eigen::Index>(p_.size()) != t ||
      s_.rows() != t || s_.cols() != t) {
    throw std::invalid_argument("BlockSpec parameter sizes disagree");
  }
  for (Eigen::Index i = 0; i < t; ++i) {
    if (sizes_[i] < 1) throw std::invalid_argument("BlockSpec block " + std::to_string(i) + " is empty");
    s_(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < t; ++j) {
      if (s_(i, j) != s_(j, i)) {
        throw std::invalid_argument("BlockSpec s(" + std::to_string(i) + "," + std::to_string(j) +
                                    ") != s(" + std::to_string(j) + "," + std::to_string(i) + ")");
      }
    }
  }
}

int BlockSpec::order() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

bool BlockSpec::is_integral() const {
  auto integral = [](double v) { return std::isfinite(v) && v == std::nearbyint(v); };
  return std::all_of(l_.begin(), l_.end(), integral) && std::all_of(p_.begin(), p_.end(), integral) &&
         s_.unaryExpr([&](double v) { return integral(v) ? 1.0 : 0.0; }).minCoeff() > 0.0;
}

IndexPartition BlockSpec::partition() const {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (int size : sizes_) {
    std::vector<int> b(size);
    std::iota(b.begin(), b.end(), next);
    next += size;
    blocks.push_back(std::move(b));
  }
  return IndexPartition(std::move(blocks), next);
}

Eigen::MatrixXd build_from_spec(const BlockSpec& spec) {
  const int n = spec.order();
  Eigen::MatrixXd m(n, n);
  std::vector<int> offset(spec.blocks() + 1, 0);
  for (int i = 0; i < spec.blocks(); ++i) offset[i + 1] = offset[i] + spec.sizes()[i];
  for (int i = 0; i < spec.blocks(); ++i) {
    for (int j = 0; j < spec.blocks(); ++j) {
      auto blk = m.block(offset[i], offset[j], spec.sizes()[i], spec.sizes()[j]);
      if (i == j) {
        blk.setConstant(spec.l()[i]);
        blk.diagonal().array() += spec.p()[i];
      } else {
        blk.setConstant(spec.s()(i, j));
      }
    }
  }
  return m;
}

QuotientMatrix spec_quotient(const BlockSpec& spec) {
  const int t = spec.blocks();
  QuotientMatrix b(t, t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      b(i, j) = i == j ? spec.l()[i] * spec.sizes()[i] + spec.p()[i] : spec.s()(i, j) * spec.sizes()[j];
    }
  }
  return b;
}

SpectrumMultiset structured_spectrum(const BlockSpec& spec, double cluster_tolerance) {
  const Eigen::VectorXd quotient = quotient_eigenvalues(spec_quotient(spec), spec.sizes());
  std::vector<double> values(quotient.data(), quotient.data() + quotient.size());
  for (int i = 0; i < spec.blocks(); ++i) values.insert(values.end(), spec.sizes()[i] - 1, spec.p()[i]);
  return SpectrumMultiset::cluster(std::move(values), cluster_tolerance);
}

IntPolynomial structured_char_poly(const BlockSpec& spec) {
  if (!spec.is_integral()) throw std::invalid_argument("exact structured spectrum needs integer parameters");
  IntPolynomial out = char_poly(spec_quotient(spec));
  for (int i = 0; i < spec.blocks(); ++i) {
    out *= IntPolynomial::linear(static_cast<long long>(spec.p()[i])).pow(spec.sizes()[i] - 1);
  }
  return out;
}

nlohmann::json to_json(const BlockSpec& spec) {
  nlohmann::json s = nlohmann::json::array();
  for (int i = 0; i < spec.blocks(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < spec.blocks(); ++j) row.push_back(spec.s()(i, j));
    s.push_back(std::move(row));
  }
  return {{"sizes", spec.sizes()}, {"l", spec.l()}, {"p", spec.p()}, {"s", std::move(s)}};
}

BlockSpec block_spec_from_json(const nlohmann::json& j) {
  auto sizes = j.at("sizes").get<std::vector<int>>();
  auto l = j.at("l").get<std::vector<double>>();
  auto p = j.at("p").get<std::vector<double>>();
  const auto rows = j.at("s").get<std::vector<std::vector<double>>>();
  Eigen::MatrixXd s(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("BlockSpec s must be square");
    for (std::size_t k = 0; k < rows[i].size(); ++k) s(i, k) = rows[i][k];
  }
  return BlockSpec(std::move(sizes), std::move(l), std::move(p), std::move(s));
}

}  // namespace cactiq
