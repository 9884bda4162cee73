#include "gendeg/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "gendeg/axioms.hpp"
#include "gendeg/format.hpp"

namespace gendeg {

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return Graph::parse_edge_list(buffer.str());
}

/// Recommended epsilon when none is given: half the guaranteed
/// rank-monotone bound, or 0.1 on regular graphs where the bound is
/// vacuous.
double default_epsilon(const Graph& g) {
    const ReasonablenessBound bound = reasonable_epsilon_max(g);
    return bound.unbounded() ? 0.1 : *bound.epsilon_max / 2.0;
}

RunConfig::Format effective_format(const RunConfig& config, RunConfig::Format fallback) {
    return config.format.value_or(fallback);
}

std::pair<int, int> resolve_edge(const Graph& g, const RunConfig& config) {
    if (!config.edge) throw ParameterError("this check needs --edge A,B");
    const auto a = g.index_of(config.edge->first);
    const auto b = g.index_of(config.edge->second);
    if (!a) throw ParameterError("unknown node label '" + config.edge->first + "'");
    if (!b) throw ParameterError("unknown node label '" + config.edge->second + "'");
    return {*a, *b};
}

void append_labels_json(std::ostringstream& out, const Graph& g) {
    out << "[";
    for (std::size_t i = 0; i < g.labels().size(); ++i) {
        if (i) out << ",";
        out << "\"" << json_escape(g.labels()[i]) << "\"";
    }
    out << "]";
}

void append_values_json(std::ostringstream& out, const Eigen::VectorXd& values) {
    out << "[";
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i) out << ",";
        out << format_double(values(i));
    }
    out << "]";
}

void append_ranking_json(std::ostringstream& out, const RankingResult& ranking,
                         const Graph& g) {
    out << "[";
    for (std::size_t t = 0; t < ranking.tie_groups.size(); ++t) {
        if (t) out << ",";
        out << "[";
        const auto& group = ranking.tie_groups[t];
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i) out << ",";
            out << "\"" << json_escape(g.label(group[i])) << "\"";
        }
        out << "]";
    }
    out << "]";
}

std::string vector_record_json(const char* param_name, double param,
                               const Graph& g, const Eigen::VectorXd& values,
                               const RankingResult& ranking) {
    std::ostringstream out;
    out << "{\"" << param_name << "\":" << format_double(param) << ",\"labels\":";
    append_labels_json(out, g);
    out << ",\"values\":";
    append_values_json(out, values);
    out << ",\"ranking\":";
    append_ranking_json(out, ranking, g);
    out << "}\n";
    return out.str();
}

std::string vector_record_csv(const char* param_name, double param,
                              const Graph& g, const Eigen::VectorXd& values) {
    EpsilonSweep single;
    single.points.push_back({CentralityVector{param, values}, RankingResult{}});
    std::string csv = to_csv(single, g);
    if (std::string(param_name) != "epsilon") {
        const std::size_t cut = csv.find(',');
        csv = std::string(param_name) + csv.substr(cut == std::string::npos ? 0 : cut);
    }
    return csv;
}

int run_compute(const RunConfig& config, const Graph& g, std::string& artifact) {
    const double epsilon = config.epsilon.value_or(default_epsilon(g));
    const CentralityVector x = generalized_degree_exact(g, epsilon, config.tol);
    const RankingResult ranking = rank(x, config.tie_tol);
    if (effective_format(config, RunConfig::Format::json) == RunConfig::Format::json)
        artifact = vector_record_json("epsilon", epsilon, g, x.values, ranking);
    else
        artifact = vector_record_csv("epsilon", epsilon, g, x.values);
    return kExitOk;
}

int run_sweep(const RunConfig& config, const Graph& g, std::string& artifact) {
    if (!config.grid) throw ParameterError("sweep needs --grid lo:hi:steps[:log|lin]");
    const EpsilonSweep result = sweep(g, *config.grid, config.tie_tol, config.tol);
    if (effective_format(config, RunConfig::Format::csv) == RunConfig::Format::csv) {
        artifact = to_csv(result, g);
        return kExitOk;
    }
    std::ostringstream out;
    out << "{\"labels\":";
    append_labels_json(out, g);
    out << ",\"points\":[";
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        if (i) out << ",\n ";
        const auto& point = result.points[i];
        out << "{\"epsilon\":" << format_double(point.centrality.epsilon)
            << ",\"values\":";
        append_values_json(out, point.centrality.values);
        out << ",\"ranking\":";
        append_ranking_json(out, point.ranking, g);
        out << "}";
    }
    out << "]}\n";
    artifact = out.str();
    return kExitOk;
}

int run_watershed(const RunConfig& config, const Graph& g, std::string& artifact) {
    if (effective_format(config, RunConfig::Format::json) != RunConfig::Format::json)
        throw ParameterError("watershed emits JSON only");
    EpsilonGrid grid{0.01, 100.0, 64, GridScale::logarithmic};
    if (config.grid) grid = *config.grid;
    const WatershedReport report =
        watersheds(g, grid.lo, grid.hi, grid.steps, 1e-9, config.tie_tol);
    artifact = to_json(report, g) + "\n";
    return kExitOk;
}

int run_check(const RunConfig& config, const Graph* g, std::string& artifact) {
    if (config.arm_sweep) {
        ArmSweepConfig sweep_config;
        sweep_config.graphs = config.sweep_graphs;
        sweep_config.edits_per_graph = config.sweep_edits;
        sweep_config.seed = config.seed;
        sweep_config.tie_tol = config.tie_tol;
        const ArmSweepResult result = arm_sufficiency_sweep(sweep_config);
        std::ostringstream out;
        out << "{\"seed\":" << result.seed << ",\"graphs\":" << result.graphs_checked
            << ",\"edits\":" << result.edits_checked
            << ",\"checks\":" << result.checks_run << ",\"violations\":"
            << to_json(result.violations) << "}\n";
        artifact = out.str();
        return (config.strict && !result.violations.empty()) ? kExitCheckFailed
                                                             : kExitOk;
    }

    std::vector<AxiomReport> reports;
    if (config.check_scb) {
        int n = config.scb_n;
        if (n == 0 && g) n = g->node_count();
        if (n == 0) throw ParameterError("check --scb needs --n or an input graph");
        const double epsilon = config.epsilon.value_or(1.0);
        reports.push_back(check_scb(n, epsilon));
    } else {
        if (!g) throw ParameterError("this check needs --input");
        if (config.check_arm || config.check_iic) {
            const auto [a, b] = resolve_edge(*g, config);
            const double epsilon = config.epsilon.value_or(default_epsilon(*g));
            if (config.check_arm)
                reports.push_back(check_arm(*g, a, b, epsilon, config.tie_tol));
            else
                reports.push_back(check_iic(*g, a, b, epsilon, config.tie_tol));
        } else {
            std::vector<double> epsilons = config.suite_epsilons;
            if (epsilons.empty()) {
                if (config.epsilon)
                    epsilons = {*config.epsilon};
                else
                    epsilons = {0.01, 0.1, 1.0, 10.0};
            }
            reports = property_suite(*g, epsilons, config.tie_tol);
        }
    }

    artifact = to_json(reports, g) + "\n";
    bool all_pass = true;
    for (const auto& report : reports) all_pass = all_pass && report.pass;
    return (config.strict && !all_pass) ? kExitCheckFailed : kExitOk;
}

int run_iterate(const RunConfig& config, const Graph& g, std::string& artifact,
                std::ostream& err) {
    const double epsilon = config.epsilon.value_or(default_epsilon(g));
    const NeumannResult result =
        generalized_degree_neumann(g, epsilon, config.tol, config.k_max);
    const auto& trace = result.trace;

    if (effective_format(config, RunConfig::Format::csv) == RunConfig::Format::csv) {
        std::ostringstream out;
        out << "k,term_norm";
        for (const auto& label : g.labels()) out << "," << csv_escape(label);
        out << "\n";
        for (std::size_t k = 0; k < trace.partial_sums.size(); ++k) {
            out << k << "," << format_double(trace.term_norms[k]);
            for (Eigen::Index i = 0; i < trace.partial_sums[k].size(); ++i)
                out << "," << format_double(trace.partial_sums[k](i));
            out << "\n";
        }
        artifact = out.str();
    } else {
        std::ostringstream out;
        out << "{\"epsilon\":" << format_double(epsilon)
            << ",\"beta\":" << format_double(trace.beta) << ",\"converged\":"
            << (trace.converged ? "true" : "false") << ",\"steps\":[";
        for (std::size_t k = 0; k < trace.partial_sums.size(); ++k) {
            if (k) out << ",\n ";
            out << "{\"k\":" << k
                << ",\"term_norm\":" << format_double(trace.term_norms[k])
                << ",\"values\":";
            append_values_json(out, trace.partial_sums[k]);
            out << "}";
        }
        out << "]}\n";
        artifact = out.str();
    }
    if (!trace.converged)
        err << "warning: iteration cap reached before the term norm dropped below "
            << format_double(config.tol) << "\n";
    return kExitOk;
}

int run_solitariness(const RunConfig& config, const Graph& g, std::string& artifact) {
    const SolitarinessVector s = solitariness(g, config.alpha);
    const RankingResult ranking = rank_values(s.values, config.tie_tol);
    if (effective_format(config, RunConfig::Format::json) == RunConfig::Format::json)
        artifact = vector_record_json("alpha", s.alpha, g, s.values, ranking);
    else
        artifact = vector_record_csv("alpha", s.alpha, g, s.values);
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::optional<Graph> graph;
        const bool wants_input =
            config.command != RunConfig::Command::check || !config.input_path.empty();
        if (wants_input) {
            if (config.input_path.empty())
                throw ParameterError("missing --input");
            graph = load_graph(config.input_path);
        }

        std::string artifact;
        int code = kExitOk;
        switch (config.command) {
            case RunConfig::Command::compute:
                code = run_compute(config, *graph, artifact);
                break;
            case RunConfig::Command::sweep:
                code = run_sweep(config, *graph, artifact);
                break;
            case RunConfig::Command::watershed:
                code = run_watershed(config, *graph, artifact);
                break;
            case RunConfig::Command::check:
                code = run_check(config, graph ? &*graph : nullptr, artifact);
                break;
            case RunConfig::Command::iterate:
                code = run_iterate(config, *graph, artifact, err);
                break;
            case RunConfig::Command::solitariness:
                code = run_solitariness(config, *graph, artifact);
                break;
        }

        if (config.output_path.empty()) {
            out << artifact;
        } else {
            std::ofstream file(config.output_path);
            if (!file) throw ParameterError("cannot write output file '" +
                                            config.output_path + "'");
            file << artifact;
        }
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitNumericError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsageError;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string grid_text;
    std::string edge_text;
    std::string format_text;

    CLI::App app{"generalized degree centrality toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input_path, "edge-list file");
        sub->add_option("--epsilon", [&config](const CLI::results_t& res) {
            double value = 0.0;
            if (!CLI::detail::lexical_cast(res[0], value)) return false;
            config.epsilon = value;
            return true;
        }, "interpolation parameter (default: half the rank-monotone bound)");
        sub->add_option("--tol", config.tol, "solver residual tolerance");
        sub->add_option("--tie-tol", config.tie_tol, "ranking tie tolerance");
        sub->add_option("--grid", grid_text, "epsilon grid lo:hi:steps[:log|lin]");
        sub->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", config.output_path, "output file (default: stdout)");
        sub->add_option("--seed", config.seed, "seed for randomized suites");
        sub->add_option("--k-max", config.k_max, "iteration cap");
        sub->add_flag("--strict", config.strict, "exit nonzero on any failing check");
    };

    auto* compute = app.add_subcommand("compute", "centrality vector and ranking");
    auto* sweep_cmd = app.add_subcommand("sweep", "centrality across an epsilon grid");
    auto* watershed_cmd =
        app.add_subcommand("watershed", "epsilon values where the ranking changes");
    auto* check = app.add_subcommand("check", "executable axiom checks");
    auto* iterate = app.add_subcommand("iterate", "Neumann iteration trace");
    auto* solitariness_cmd =
        app.add_subcommand("solitariness", "1 - q_ii baseline measure");

    for (CLI::App* sub :
         {compute, sweep_cmd, watershed_cmd, check, iterate, solitariness_cmd})
        add_common(sub);

    check->add_flag("--arm", config.check_arm, "adding rank monotonicity for --edge");
    check->add_flag("--iic", config.check_iic,
                    "independence of irrelevant connections for --edge");
    check->add_flag("--scb", config.check_scb, "star center base for --n");
    check->add_flag("--suite", config.check_suite, "full property suite (default)");
    check->add_flag("--arm-sweep", config.arm_sweep,
                    "randomized ARM falsification sweep");
    check->add_option("--edge", edge_text, "edge as two labels A,B");
    check->add_option("--n", config.scb_n, "star size for --scb");
    check->add_option("--epsilons", config.suite_epsilons, "suite epsilon list")
        ->delimiter(',');
    check->add_option("--graphs", config.sweep_graphs, "graphs for --arm-sweep");
    check->add_option("--edits", config.sweep_edits, "edge additions per graph");

    solitariness_cmd->add_option("--alpha", config.alpha, "solitariness parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    if (compute->parsed()) config.command = RunConfig::Command::compute;
    if (sweep_cmd->parsed()) config.command = RunConfig::Command::sweep;
    if (watershed_cmd->parsed()) config.command = RunConfig::Command::watershed;
    if (check->parsed()) config.command = RunConfig::Command::check;
    if (iterate->parsed()) config.command = RunConfig::Command::iterate;
    if (solitariness_cmd->parsed()) config.command = RunConfig::Command::solitariness;

    const int selectors = int(config.check_arm) + int(config.check_iic) +
                          int(config.check_scb) + int(config.check_suite) +
                          int(config.arm_sweep);
    if (selectors > 1) {
        err << "error: pick one of --arm, --iic, --scb, --suite, --arm-sweep\n";
        return kExitUsageError;
    }

    if (!format_text.empty())
        config.format = format_text == "csv" ? RunConfig::Format::csv
                                             : RunConfig::Format::json;
    if (!grid_text.empty()) {
        try {
            config.grid = EpsilonGrid::parse(grid_text);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsageError;
        }
    }
    if (!edge_text.empty()) {
        const std::size_t comma = edge_text.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == edge_text.size()) {
            err << "error: --edge needs two labels A,B\n";
            return kExitUsageError;
        }
        config.edge = {edge_text.substr(0, comma), edge_text.substr(comma + 1)};
    }

    return run(config, out, err);
}

} // namespace gendeg
