#include "gendeg/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gendeg/format.hpp"
#include "gendeg/random_graphs.hpp"

namespace gendeg {

namespace {

constexpr double kIdcpTol = 1e-10;
constexpr double kFlatnessTol = 1e-10;
constexpr double kAgreementEpsLow = 1e-8;
constexpr double kAgreementEpsHigh = 1e8;
constexpr double kAgreementTol = 1e-5;

double bound_lhs(int dmax, int dmin, double eps) {
    return (dmax - dmin) * ((2.0 * dmax + 4.0) * eps * eps * eps + 2.0 * eps * eps + eps);
}

AxiomWitness make_witness(std::vector<int> nodes,
                          std::vector<std::pair<std::string, double>> values,
                          std::string detail) {
    AxiomWitness w;
    w.nodes = std::move(nodes);
    w.values = std::move(values);
    w.detail = std::move(detail);
    return w;
}

} // namespace

ReasonablenessBound reasonable_epsilon_max(int max_degree, int min_degree) {
    if (min_degree < 0 || max_degree < min_degree)
        throw ParameterError("need 0 <= min_degree <= max_degree");
    ReasonablenessBound bound;
    bound.max_degree = max_degree;
    bound.min_degree = min_degree;
    if (max_degree == min_degree) return bound; // condition holds for every eps

    // The left side is strictly increasing in eps, so bracket and bisect
    // down to floating-point resolution.
    double lo = 0.0;
    double hi = 1.0;
    while (bound_lhs(max_degree, min_degree, hi) < 1.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (bound_lhs(max_degree, min_degree, mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    bound.epsilon_max = 0.5 * (lo + hi);
    return bound;
}

ReasonablenessBound reasonable_epsilon_max(const Graph& g) {
    const auto d = degree(g);
    return reasonable_epsilon_max(d.max_degree, d.min_degree);
}

std::string_view to_string(AxiomId id) {
    switch (id) {
        case AxiomId::arm: return "arm";
        case AxiomId::scb: return "scb";
        case AxiomId::iic: return "iic";
        case AxiomId::degree_preservation: return "degree_preservation";
        case AxiomId::zero_presumption: return "zero_presumption";
        case AxiomId::idcp: return "idcp";
        case AxiomId::boundedness: return "boundedness";
        case AxiomId::agreement: return "agreement";
        case AxiomId::flatness: return "flatness";
    }
    return "unknown";
}

AxiomReport check_arm(const Graph& g, int i, int j, double epsilon, double tol) {
    const int n = g.node_count();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw ParameterError("node index out of range");
    if (i == j) throw EdgeStateError("edge endpoints must differ");
    if (g.has_edge(i, j)) throw EdgeStateError("edge already present");

    const Eigen::VectorXd before = generalized_degree_exact(g, epsilon).values;
    const Eigen::VectorXd after =
        generalized_degree_exact(add_edge(g, i, j), epsilon).values;

    AxiomReport report{AxiomId::arm, true, epsilon, tol, std::nullopt};
    for (int endpoint : {i, j}) {
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const bool was_at_least = before(endpoint) > before(k) - tol;
            const bool was_above = before(endpoint) > before(k) + tol;
            const bool is_at_least = after(endpoint) > after(k) - tol;
            const bool is_above = after(endpoint) > after(k) + tol;
            const bool overtaken = was_at_least && !is_at_least;
            const bool lead_lost = was_above && !is_above;
            if (!overtaken && !lead_lost) continue;

            std::ostringstream detail;
            detail << "node " << g.label(k) << " "
                   << (overtaken ? "overtakes" : "catches up with") << " endpoint "
                   << g.label(endpoint) << " after adding {" << g.label(i) << ","
                   << g.label(j) << "}";
            report.pass = false;
            report.witness = make_witness(
                {endpoint, k},
                {{"x_i_before", before(endpoint)},
                 {"x_k_before", before(k)},
                 {"x_i_after", after(endpoint)},
                 {"x_k_after", after(k)}},
                detail.str());
            return report;
        }
    }
    return report;
}

AxiomReport check_scb(int n, double epsilon) {
    if (n < 3) throw ParameterError("star center base needs at least 3 nodes");
    constexpr double gap_tol = 1e-10;
    const Graph g = Graph::star(n);
    const Eigen::VectorXd x = generalized_degree_exact(g, epsilon).values;
    const double expected_gap = (n - 2.0) / (1.0 + epsilon * n);

    AxiomReport report{AxiomId::scb, true, epsilon, gap_tol, std::nullopt};
    for (int leaf = 1; leaf < n; ++leaf) {
        const double gap = x(0) - x(leaf);
        if (x(0) > x(leaf) && std::abs(gap - expected_gap) <= gap_tol) continue;
        report.pass = false;
        report.witness = make_witness(
            {0, leaf},
            {{"x_center", x(0)}, {"x_leaf", x(leaf)}, {"expected_gap", expected_gap}},
            x(0) > x(leaf) ? "center-leaf gap deviates from the closed form"
                           : "center does not strictly exceed the leaf");
        return report;
    }
    return report;
}

AxiomReport check_iic(const Graph& g, int k, int l, double epsilon, double tol,
                      MeasureKind measure) {
    const int n = g.node_count();
    if (k < 0 || l < 0 || k >= n || l >= n)
        throw ParameterError("node index out of range");
    if (k == l) throw ParameterError("toggle endpoints must differ");

    const Graph toggled = g.has_edge(k, l) ? remove_edge(g, k, l) : add_edge(g, k, l);

    auto evaluate = [&](const Graph& graph) -> Eigen::VectorXd {
        if (measure == MeasureKind::degree) {
            const auto d = degree(graph).values;
            Eigen::VectorXd v(n);
            for (int idx = 0; idx < n; ++idx) v(idx) = d[static_cast<std::size_t>(idx)];
            return v;
        }
        return generalized_degree_exact(graph, epsilon).values;
    };
    const Eigen::VectorXd before = evaluate(g);
    const Eigen::VectorXd after = evaluate(toggled);

    AxiomReport report{AxiomId::iic, true, epsilon, tol, std::nullopt};
    for (int p = 0; p < n; ++p) {
        if (p == k || p == l) continue;
        for (int q = 0; q < n; ++q) {
            if (q == k || q == l || q == p) continue;
            const bool was_at_least = before(p) > before(q) - tol;
            const bool is_at_least = after(p) > after(q) - tol;
            if (!was_at_least || is_at_least) continue;

            std::ostringstream detail;
            detail << "toggling {" << g.label(k) << "," << g.label(l) << "} reorders "
                   << g.label(p) << " and " << g.label(q);
            report.pass = false;
            report.witness = make_witness(
                {p, q},
                {{"x_i_before", before(p)},
                 {"x_j_before", before(q)},
                 {"x_i_after", after(p)},
                 {"x_j_after", after(q)}},
                detail.str());
            return report;
        }
    }
    return report;
}

namespace {

AxiomReport suite_report(AxiomId id, double epsilon, double tol) {
    return AxiomReport{id, true, epsilon, tol, std::nullopt};
}

AxiomReport check_degree_preservation(const Graph& g, const CentralityVector& x,
                                      double tol) {
    const auto d = degree(g).values;
    double degree_sum = 0.0;
    for (int v : d) degree_sum += v;
    const double sum = x.values.sum();
    const double budget = g.node_count() * tol;
    AxiomReport report = suite_report(AxiomId::degree_preservation, x.epsilon, budget);
    if (std::abs(sum - degree_sum) > budget) {
        report.pass = false;
        report.witness = make_witness(
            {}, {{"centrality_sum", sum}, {"degree_sum", degree_sum}},
            "centrality total drifted from the degree total");
    }
    return report;
}

AxiomReport check_zero_presumption(const Graph& g, const CentralityVector& x,
                                   double tol) {
    const auto d = degree(g).values;
    AxiomReport report = suite_report(AxiomId::zero_presumption, x.epsilon, tol);
    for (int i = 0; i < g.node_count(); ++i) {
        const bool isolated = d[static_cast<std::size_t>(i)] == 0;
        const bool vanishes = std::abs(x.values(i)) <= tol;
        if (isolated == vanishes) continue;
        report.pass = false;
        report.witness = make_witness(
            {i},
            {{"degree", static_cast<double>(d[static_cast<std::size_t>(i)])},
             {"centrality", x.values(i)}},
            isolated ? "isolated node with nonzero centrality"
                     : "connected node with vanishing centrality");
        return report;
    }
    return report;
}

AxiomReport check_idcp(const Graph& g, const CentralityVector& x) {
    AxiomReport report = suite_report(AxiomId::idcp, x.epsilon, kIdcpTol);
    for (const auto& block : components(g)) {
        const Graph part = induced_subgraph(g, block);
        const Eigen::VectorXd local =
            generalized_degree_exact(part, x.epsilon).values;
        for (std::size_t pos = 0; pos < block.size(); ++pos) {
            const int node = block[pos];
            const double diff = std::abs(local(static_cast<Eigen::Index>(pos)) -
                                         x.values(node));
            if (diff <= kIdcpTol) continue;
            report.pass = false;
            report.witness = make_witness(
                {node},
                {{"whole_graph", x.values(node)},
                 {"component_only", local(static_cast<Eigen::Index>(pos))}},
                "per-component recomputation disagrees");
            return report;
        }
    }
    return report;
}

AxiomReport check_boundedness(const Graph& g, const CentralityVector& x, double tol) {
    const auto d = degree(g);
    AxiomReport report = suite_report(AxiomId::boundedness, x.epsilon, tol);
    for (int i = 0; i < g.node_count(); ++i) {
        if (x.values(i) >= d.min_degree - tol && x.values(i) <= d.max_degree + tol)
            continue;
        report.pass = false;
        report.witness = make_witness(
            {i},
            {{"centrality", x.values(i)},
             {"min_degree", static_cast<double>(d.min_degree)},
             {"max_degree", static_cast<double>(d.max_degree)}},
            "centrality escapes the degree range");
        return report;
    }
    return report;
}

AxiomReport check_flatness(const Graph& g, const CentralityVector& x) {
    const auto d = degree(g);
    const bool regular = d.max_degree == d.min_degree;
    const double top = x.values.maxCoeff();
    const double spread = top - x.values.minCoeff();
    const bool flat = spread <= kFlatnessTol * std::max(1.0, std::abs(top));

    AxiomReport report = suite_report(AxiomId::flatness, x.epsilon, kFlatnessTol);
    if (flat != regular) {
        report.pass = false;
        report.witness = make_witness(
            {}, {{"spread", spread}, {"max_degree", static_cast<double>(d.max_degree)},
                 {"min_degree", static_cast<double>(d.min_degree)}},
            flat ? "flat centrality on an irregular graph"
                 : "regular graph with non-flat centrality");
    } else {
        report.note = flat ? "flat and regular" : "non-flat and irregular";
    }
    return report;
}

AxiomReport check_agreement_low(const Graph& g) {
    const Eigen::VectorXd x = generalized_degree_exact(g, kAgreementEpsLow).values;
    const auto d = degree(g).values;
    AxiomReport report = suite_report(AxiomId::agreement, kAgreementEpsLow, kAgreementTol);
    for (int i = 0; i < g.node_count(); ++i) {
        const double diff = std::abs(x(i) - d[static_cast<std::size_t>(i)]);
        if (diff <= kAgreementTol) continue;
        report.pass = false;
        report.witness = make_witness(
            {i},
            {{"centrality", x(i)},
             {"degree", static_cast<double>(d[static_cast<std::size_t>(i)])}},
            "small-epsilon limit drifts from degree");
        return report;
    }
    return report;
}

AxiomReport check_agreement_high(const Graph& g) {
    const Eigen::VectorXd x = generalized_degree_exact(g, kAgreementEpsHigh).values;
    const auto d = degree(g).values;
    AxiomReport report =
        suite_report(AxiomId::agreement, kAgreementEpsHigh, kAgreementTol);
    for (const auto& block : components(g)) {
        double mean = 0.0;
        for (int node : block) mean += d[static_cast<std::size_t>(node)];
        mean /= static_cast<double>(block.size());
        for (int node : block) {
            const double diff = std::abs(x(node) - mean);
            if (diff <= kAgreementTol) continue;
            report.pass = false;
            report.witness = make_witness(
                {node}, {{"centrality", x(node)}, {"component_mean", mean}},
                "large-epsilon limit drifts from the component mean");
            return report;
        }
    }
    return report;
}

} // namespace

std::vector<AxiomReport> property_suite(const Graph& g,
                                        const std::vector<double>& epsilons,
                                        double tol) {
    std::vector<AxiomReport> reports;
    for (double epsilon : epsilons) {
        const CentralityVector x = generalized_degree_exact(g, epsilon);
        reports.push_back(check_degree_preservation(g, x, tol));
        reports.push_back(check_zero_presumption(g, x, tol));
        reports.push_back(check_idcp(g, x));
        reports.push_back(check_boundedness(g, x, tol));
        reports.push_back(check_flatness(g, x));
    }
    reports.push_back(check_agreement_low(g));
    reports.push_back(check_agreement_high(g));
    return reports;
}

ArmSweepResult arm_sufficiency_sweep(const ArmSweepConfig& config) {
    if (config.graphs < 1 || config.edits_per_graph < 1)
        throw ParameterError("sweep needs at least one graph and one edit");
    if (config.min_nodes < 3 || config.max_nodes < config.min_nodes)
        throw ParameterError("invalid node range");

    std::mt19937_64 rng(config.seed);
    ArmSweepResult result;
    result.seed = config.seed;

    for (int gi = 0; gi < config.graphs; ++gi) {
        Graph g = Graph::path(2); // placeholder, replaced below
        std::vector<std::pair<int, int>> non_edges;
        // Resample until the graph admits an edge addition.
        do {
            const int n = config.min_nodes +
                          uniform_below(rng, config.max_nodes - config.min_nodes + 1);
            g = random_connected_graph(rng, n);
            non_edges.clear();
            for (int i = 0; i < g.node_count(); ++i)
                for (int j = i + 1; j < g.node_count(); ++j)
                    if (!g.has_edge(i, j)) non_edges.emplace_back(i, j);
        } while (non_edges.empty());

        const ReasonablenessBound bound = reasonable_epsilon_max(g);
        const double cap = bound.epsilon_max.value_or(1.0);
        ++result.graphs_checked;

        for (int ei = 0; ei < config.edits_per_graph; ++ei) {
            const auto [i, j] =
                non_edges[static_cast<std::size_t>(uniform_below(
                    rng, static_cast<int>(non_edges.size())))];
            ++result.edits_checked;
            for (double fraction : config.epsilon_fractions) {
                const AxiomReport report =
                    check_arm(g, i, j, fraction * cap, config.tie_tol);
                ++result.checks_run;
                if (!report.pass) result.violations.push_back(report);
            }
        }
    }
    return result;
}

namespace {

void append_witness_json(std::ostringstream& out, const AxiomWitness& w,
                         const Graph* g) {
    out << "{\"nodes\":[";
    for (std::size_t i = 0; i < w.nodes.size(); ++i) {
        if (i) out << ",";
        if (g)
            out << "\"" << json_escape(g->label(w.nodes[i])) << "\"";
        else
            out << w.nodes[i];
    }
    out << "],\"values\":{";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i) out << ",";
        out << "\"" << json_escape(w.values[i].first)
            << "\":" << format_double(w.values[i].second);
    }
    out << "},\"detail\":\"" << json_escape(w.detail) << "\"}";
}

} // namespace

std::string to_json(const AxiomReport& report, const Graph* g) {
    std::ostringstream out;
    out << "{\"axiom\":\"" << to_string(report.axiom) << "\",\"verdict\":\""
        << (report.pass ? "pass" : "fail")
        << "\",\"epsilon\":" << format_double(report.epsilon)
        << ",\"tolerance\":" << format_double(report.tol) << ",\"witness\":";
    if (report.witness)
        append_witness_json(out, *report.witness, g);
    else
        out << "null";
    out << "}";
    return out.str();
}

std::string to_json(const std::vector<AxiomReport>& reports, const Graph* g) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) out << ",\n ";
        out << to_json(reports[i], g);
    }
    out << "]";
    return out.str();
}

} // namespace gendeg
