#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gendeg/graph.hpp"
#include "gendeg/solver.hpp"

namespace gendeg {

/// Largest epsilon for which
///   (dmax - dmin) * [(2 dmax + 4) eps^3 + 2 eps^2 + eps] <= 1
/// holds, i.e. the guaranteed rank-monotone regime. Regular graphs
/// (dmax == dmin) are unbounded.
struct ReasonablenessBound {
    int max_degree = 0;
    int min_degree = 0;
    std::optional<double> epsilon_max; // nullopt: every epsilon qualifies

    bool unbounded() const { return !epsilon_max.has_value(); }
};

ReasonablenessBound reasonable_epsilon_max(int max_degree, int min_degree);
ReasonablenessBound reasonable_epsilon_max(const Graph& g);

enum class AxiomId {
    arm,
    scb,
    iic,
    degree_preservation,
    zero_presumption,
    idcp,
    boundedness,
    agreement,
    flatness,
};

std::string_view to_string(AxiomId id);

/// Counterexample data attached to a failed check. `nodes` are the
/// offending node indices; `values` the named quantities that reproduce
/// the violating comparison.
struct AxiomWitness {
    std::vector<int> nodes;
    std::vector<std::pair<std::string, double>> values;
    std::string detail;
};

struct AxiomReport {
    AxiomId axiom;
    bool pass = false;
    double epsilon = 0.0;
    double tol = 0.0;
    std::optional<AxiomWitness> witness;
    std::string note; // informational only, not serialized
};

/// Adding rank monotonicity for the edit g -> g + {i,j}: no node outside
/// {i,j} may overtake either endpoint, and no strict lead of an endpoint
/// may degrade to a tie. Comparisons treat differences within tol as ties.
/// Requires i != j and the edge absent.
AxiomReport check_arm(const Graph& g, int i, int j, double epsilon,
                      double tol = kDefaultTieTol);

/// Star center base on star(n): the center must strictly exceed every
/// leaf, and the gap must match (n - 2) / (1 + epsilon n) within 1e-10.
AxiomReport check_scb(int n, double epsilon);

/// Measure used by check_iic; degree serves as the control that does
/// satisfy independence of irrelevant connections.
enum class MeasureKind { generalized_degree, degree };

/// Independence of irrelevant connections: toggles the edge {k,l} and
/// requires every weak-order relation between nodes outside {k,l} to be
/// preserved.
AxiomReport check_iic(const Graph& g, int k, int l, double epsilon,
                      double tol = kDefaultTieTol,
                      MeasureKind measure = MeasureKind::generalized_degree);

/// Runs degree_preservation, zero_presumption, idcp, boundedness and
/// flatness once per epsilon, plus the two agreement endpoint checks
/// (epsilon = 1e-8 against d, epsilon = 1e8 against per-component means).
std::vector<AxiomReport> property_suite(const Graph& g,
                                        const std::vector<double>& epsilons,
                                        double tol = kDefaultTieTol);

/// Randomized falsification sweep for the sufficiency bound: seeded
/// random connected graphs, random single-edge additions, ARM checked at
/// fractions of the pre-edit graph's epsilon_max. Any violation recorded
/// here falsifies the implementation.
struct ArmSweepConfig {
    int graphs = 200;
    int edits_per_graph = 20;
    int min_nodes = 3;
    int max_nodes = 20;
    std::vector<double> epsilon_fractions = {0.25, 0.5, 0.75, 1.0};
    std::uint64_t seed = 1;
    double tie_tol = kDefaultTieTol;
};

struct ArmSweepResult {
    std::uint64_t seed = 0;
    int graphs_checked = 0;
    int edits_checked = 0;
    int checks_run = 0;
    std::vector<AxiomReport> violations;
};

ArmSweepResult arm_sufficiency_sweep(const ArmSweepConfig& config);

/// JSON record with fixed field names: axiom, verdict, epsilon,
/// tolerance, witness. Node indices become labels when a graph is given.
std::string to_json(const AxiomReport& report, const Graph* g = nullptr);
std::string to_json(const std::vector<AxiomReport>& reports, const Graph* g = nullptr);

} // namespace gendeg
