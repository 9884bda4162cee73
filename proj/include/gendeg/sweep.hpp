#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gendeg/graph.hpp"
#include "gendeg/solver.hpp"

namespace gendeg {

/// Weak-order ranking: tie groups ordered most central first. Groups
/// partition the nodes; members of a group are within the tie tolerance
/// of a chain of neighbours (single linkage), and consecutive groups are
/// separated by more than the tolerance.
struct RankingResult {
    std::vector<std::vector<int>> tie_groups;
    double tolerance = 0.0;
};

RankingResult rank_values(const Eigen::VectorXd& values, double tol);
RankingResult rank(const CentralityVector& x, double tol = kDefaultTieTol);

/// Group structure equality (tolerances are not compared).
bool same_ranking(const RankingResult& a, const RankingResult& b);

enum class GridScale { linear, logarithmic };

struct EpsilonGrid {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;
    GridScale scale = GridScale::linear;

    /// Parses "lo:hi:steps" with an optional ":log" or ":lin" suffix.
    static EpsilonGrid parse(std::string_view text);

    /// Validates and expands to a strictly increasing point list.
    /// steps == 1 is allowed when lo == hi (single evaluation point).
    std::vector<double> points() const;
};

struct SweepPoint {
    CentralityVector centrality;
    RankingResult ranking;
};

struct EpsilonSweep {
    std::vector<SweepPoint> points;
};

EpsilonSweep sweep(const Graph& g, const EpsilonGrid& grid,
                   double tie_tol = kDefaultTieTol,
                   double solver_tol = kDefaultSolverTol);

struct WatershedInterval {
    double lo = 0.0;
    double hi = 0.0;
    RankingResult ranking;
};

/// Epsilon values where the centrality ranking changes, with the stable
/// ranking observed on each interval between them. Boundaries closer
/// together than the probe resolution may merge.
struct WatershedReport {
    std::vector<double> boundaries;
    std::vector<WatershedInterval> intervals;
};

/// Probes rankings on a logarithmic epsilon grid and bisects every
/// disagreeing probe pair down to refine_tol. eps_lo may be 0; the probe
/// list then starts at 0 followed by a logarithmic ramp.
WatershedReport watersheds(const Graph& g, double eps_lo, double eps_hi,
                           int probe_steps = 64, double refine_tol = 1e-9,
                           double tie_tol = kDefaultTieTol);

/// "1 > (2 ~ 3) > 4" style rendering with external labels.
std::string format_ranking(const RankingResult& ranking, const Graph& g);

/// Human-readable interval -> ranking table echoing the report.
std::string stable_ranking_intervals(const WatershedReport& report, const Graph& g);

/// CSV: header "epsilon,<label_1>,...,<label_n>", one row per grid
/// point, floats at 15 significant digits.
std::string to_csv(const EpsilonSweep& sweep, const Graph& g);

/// {"boundaries": [...], "intervals": [{"lo", "hi", "ranking"}...]} with
/// rankings as arrays of arrays of labels.
std::string to_json(const WatershedReport& report, const Graph& g);

} // namespace gendeg
