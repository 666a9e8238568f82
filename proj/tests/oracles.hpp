#pragma once

// Slow, independent reference implementations used only by the tests.

#include <vector>

#include <Eigen/Core>

#include "cactiq/bigint.hpp"
#include "cactiq/graph.hpp"
#include "cactiq/polynomial.hpp"

namespace oracle {

/// Every labeled graph on n vertices, indexed by the bitmask of its edges in
/// (0,1), (0,2), ..., (n-2,n-1) order.
std::vector<cactiq::Graph> all_graphs(int n);

bool connected(const cactiq::Graph& g);

/// Simple cycles as vertex bitmasks, found by depth-first path search.
std::vector<unsigned> cycles(const cactiq::Graph& g);

/// Connected and any two distinct cycles share at most one vertex.
bool cactus(const cactiq::Graph& g);

/// Largest matching by trying edge subsets of increasing size.
int matching_number(const cactiq::Graph& g);

/// Backtracking search for an adjacency-preserving bijection.
bool isomorphic(const cactiq::Graph& a, const cactiq::Graph& b);

/// Connected cacti on n vertices, one per isomorphism class, from the full
/// edge-subset scan.
std::vector<cactiq::Graph> cacti_by_subsets(int n);

/// det(x I - Q(g)) by fraction-free Gaussian elimination.
cactiq::BigInt char_value(const cactiq::Graph& g, long long x);

/// Eigenvalues via Eigen's SelfAdjointEigenSolver, ascending.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m);

double q(const cactiq::Graph& g);

/// Largest real root through the eigenvalues of the companion matrix.
double largest_root(const cactiq::IntPolynomial& p);

}  // namespace oracle
