#include "gendeg/solver.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>

#include "gendeg/errors.hpp"
#include "gendeg/format.hpp"

namespace gendeg {

namespace {

constexpr int kDirectSolveLimit = 2048;

Eigen::VectorXd degree_vector(const Graph& g) {
    const auto d = degree(g).values;
    Eigen::VectorXd out(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = static_cast<double>(d[i]);
    return out;
}

void require_finite_parameter(double value, const char* name) {
    if (!std::isfinite(value))
        throw ParameterError(std::string(name) + " must be finite");
}

// Conjugate gradient for the SPD system A x = b, targeting an infinity-norm
// residual below `target`. Used above the direct-factorization size limit.
Eigen::VectorXd conjugate_gradient(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                   double target) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(b.size());
    Eigen::VectorXd r = b;
    Eigen::VectorXd p = r;
    double rho = r.squaredNorm();
    const int cap = static_cast<int>(10 * b.size()) + 100;
    for (int it = 0; it < cap; ++it) {
        if (r.lpNorm<Eigen::Infinity>() <= target) return x;
        const Eigen::VectorXd q = a * p;
        const double alpha = rho / p.dot(q);
        x += alpha * p;
        r -= alpha * q;
        const double rho_next = r.squaredNorm();
        p = r + (rho_next / rho) * p;
        rho = rho_next;
    }
    if (r.lpNorm<Eigen::Infinity>() <= target) return x;
    throw NumericError("conjugate gradient stalled; residual " +
                       format_double(r.lpNorm<Eigen::Infinity>()) +
                       " above target " + format_double(target));
}

// Normwise backward-error gate. The plain tol * max(1, ||d||) bound is
// meaningful only while ||A|| stays moderate; at the extreme epsilons the
// agreement checks use, evaluating the residual itself already costs
// O(eps_machine * ||A|| * ||x||), so the acceptance scale has to carry
// that factor.
void check_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& b, double tol) {
    if (!x.allFinite()) throw NumericError("solver produced non-finite values");
    const double scale =
        std::max({1.0, b.lpNorm<Eigen::Infinity>(),
                  a.cwiseAbs().rowwise().sum().maxCoeff() * x.lpNorm<Eigen::Infinity>()});
    const double residual = (a * x - b).lpNorm<Eigen::Infinity>();
    if (residual > tol * scale)
        throw NumericError("residual " + format_double(residual) +
                           " exceeds tolerance " + format_double(tol * scale));
}

} // namespace

CentralityVector generalized_degree_exact(const Graph& g, double epsilon, double tol) {
    require_finite_parameter(epsilon, "epsilon");
    if (epsilon < 0.0) throw ParameterError("epsilon must be nonnegative");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw ParameterError("tolerance must be positive");

    const Eigen::VectorXd d = degree_vector(g);
    if (epsilon == 0.0) return {0.0, d};

    const int n = g.node_count();
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(n, n) + epsilon * laplacian(g).cast<double>();

    Eigen::VectorXd x;
    if (n <= kDirectSolveLimit) {
        Eigen::LLT<Eigen::MatrixXd> llt(system);
        if (llt.info() != Eigen::Success)
            throw NumericError("Cholesky factorization failed");
        x = llt.solve(d);
    } else {
        const double target = 0.5 * tol * std::max(1.0, d.lpNorm<Eigen::Infinity>());
        x = conjugate_gradient(system, d, target);
    }
    check_residual(system, x, d, tol);
    return {epsilon, std::move(x)};
}

NeumannResult generalized_degree_neumann(const Graph& g, double epsilon, double tol,
                                         int k_max) {
    require_finite_parameter(epsilon, "epsilon");
    if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw ParameterError("tolerance must be positive");
    if (k_max < 1) throw ParameterError("k_max must be at least 1");

    const Eigen::VectorXd d = degree_vector(g);
    const int dmax = degree(g).max_degree;
    const double beta = epsilon / (1.0 + epsilon * dmax);
    const double normalizer = 1.0 - beta * dmax; // = 1 / (1 + eps * dmax)
    const Eigen::MatrixXd c = balanced_adjacency(g).cast<double>();

    NeumannTrace trace;
    trace.beta = beta;

    Eigen::VectorXd term = normalizer * d;
    Eigen::VectorXd x = term;
    trace.partial_sums.push_back(x);
    trace.term_norms.push_back(term.lpNorm<Eigen::Infinity>());

    trace.converged = false;
    for (int k = 1; k <= k_max; ++k) {
        term = beta * (c * term);
        x += term;
        const double norm = term.lpNorm<Eigen::Infinity>();
        trace.partial_sums.push_back(x);
        trace.term_norms.push_back(norm);
        if (!x.allFinite()) throw NumericError("Neumann iteration diverged");
        if (norm < tol) {
            trace.converged = true;
            break;
        }
    }
    return {CentralityVector{epsilon, std::move(x)}, std::move(trace)};
}

IteratedDegree iterated_degree(const Graph& g, int k) {
    if (k < 0) throw ParameterError("iteration count must be nonnegative");
    const int dmax = degree(g).max_degree;
    if (dmax == 0)
        throw ParameterError("iterated degree is undefined on an edgeless graph");
    const Eigen::MatrixXd c = balanced_adjacency(g).cast<double>();
    Eigen::VectorXd v = degree_vector(g);
    for (int step = 0; step < k; ++step) v = (c * v) / dmax;
    return {k, std::move(v)};
}

SolitarinessVector solitariness(const Graph& g, double alpha) {
    require_finite_parameter(alpha, "alpha");
    if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
    const int n = g.node_count();
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(n, n) + alpha * laplacian(g).cast<double>();
    Eigen::LLT<Eigen::MatrixXd> llt(system);
    if (llt.info() != Eigen::Success)
        throw NumericError("Cholesky factorization failed");
    const Eigen::MatrixXd q = llt.solve(Eigen::MatrixXd::Identity(n, n));
    Eigen::VectorXd values = Eigen::VectorXd::Ones(n) - q.diagonal();
    if (!values.allFinite()) throw NumericError("solitariness produced non-finite values");
    return {alpha, std::move(values)};
}

double centrality_index(const CentralityVector& x) {
    const double top = x.values.maxCoeff();
    if (!(top > 0.0))
        throw ParameterError("centrality index is undefined for an all-zero vector");
    return 1.0 / top;
}

} // namespace gendeg
