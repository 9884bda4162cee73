#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gendeg/graph.hpp"

namespace gendeg {

inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr double kDefaultTieTol = 1e-9;
inline constexpr int kDefaultNeumannCap = 10000;

/// Generalized degree x(epsilon) solving (I + epsilon L) x = d, together
/// with the epsilon that produced it.
struct CentralityVector {
    double epsilon = 0.0;
    Eigen::VectorXd values;
};

/// Record of the Neumann iteration x^(k) = x^(k-1) + (1 - beta*dmax) (beta C)^k d.
/// partial_sums[k] is x^(k); term_norms[k] is the max-norm of the term added
/// at step k (step 0 adds x^(0) itself).
struct NeumannTrace {
    double beta = 0.0;
    bool converged = false;
    std::vector<Eigen::VectorXd> partial_sums;
    std::vector<double> term_norms;
};

struct NeumannResult {
    CentralityVector centrality;
    NeumannTrace trace;
};

/// d^(k) = ((1/dmax) C)^k d: average degree reachable along k-step walks
/// in the loop-balanced graph.
struct IteratedDegree {
    int k = 0;
    Eigen::VectorXd values;
};

/// 1 - q_ii with Q = (I + alpha L)^{-1}; higher means more central.
struct SolitarinessVector {
    double alpha = 0.0;
    Eigen::VectorXd values;
};

/// Direct solve of (I + epsilon L) x = d. epsilon = 0 short-circuits to
/// x = d. Uses a Cholesky factorization up to 2048 nodes and a conjugate
/// gradient solve beyond that; either way the result is rejected with a
/// NumericError unless the residual max-norm is below
/// tol * max(1, max_i d_i).
CentralityVector generalized_degree_exact(const Graph& g, double epsilon,
                                          double tol = kDefaultSolverTol);

/// Neumann-series iteration for the same system. Stops when the added
/// term's max-norm drops below tol or after k_max steps; in the latter
/// case the result is returned with trace.converged == false.
NeumannResult generalized_degree_neumann(const Graph& g, double epsilon,
                                         double tol = kDefaultSolverTol,
                                         int k_max = kDefaultNeumannCap);

/// Requires at least one edge (propagation is undefined when dmax = 0).
IteratedDegree iterated_degree(const Graph& g, int k);

SolitarinessVector solitariness(const Graph& g, double alpha);

/// 1 / max_i x_i. Throws ParameterError on an all-zero vector.
double centrality_index(const CentralityVector& x);

} // namespace gendeg
