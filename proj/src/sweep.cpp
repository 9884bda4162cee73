#include "gendeg/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gendeg/format.hpp"

namespace gendeg {

RankingResult rank_values(const Eigen::VectorXd& values, double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw ParameterError("tie tolerance must be nonnegative");

    const int n = static_cast<int>(values.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values(a) != values(b)) return values(a) > values(b);
        return a < b;
    });

    RankingResult result;
    result.tolerance = tol;
    for (int idx : order) {
        // Single-linkage chaining: a gap within tol extends the group.
        if (result.tie_groups.empty() ||
            values(result.tie_groups.back().back()) - values(idx) > tol)
            result.tie_groups.emplace_back();
        result.tie_groups.back().push_back(idx);
    }
    for (auto& group : result.tie_groups) std::sort(group.begin(), group.end());
    return result;
}

RankingResult rank(const CentralityVector& x, double tol) {
    return rank_values(x.values, tol);
}

bool same_ranking(const RankingResult& a, const RankingResult& b) {
    return a.tie_groups == b.tie_groups;
}

EpsilonGrid EpsilonGrid::parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string buffer(text);
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = buffer.find(':', start);
        parts.push_back(buffer.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3 && parts.size() != 4)
        throw ParameterError("grid must be lo:hi:steps[:log|lin]");

    EpsilonGrid grid;
    try {
        std::size_t used = 0;
        grid.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("lo");
        grid.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("hi");
        grid.steps = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("steps");
    } catch (const std::exception&) {
        throw ParameterError("grid must be lo:hi:steps[:log|lin]");
    }
    if (parts.size() == 4) {
        if (parts[3] == "log")
            grid.scale = GridScale::logarithmic;
        else if (parts[3] == "lin")
            grid.scale = GridScale::linear;
        else
            throw ParameterError("grid scale must be 'log' or 'lin'");
    }
    return grid;
}

std::vector<double> EpsilonGrid::points() const {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ParameterError("grid bounds must be finite");
    if (lo < 0.0) throw ParameterError("grid must start at a nonnegative epsilon");
    if (steps < 1) throw ParameterError("grid needs at least one step");
    if (steps == 1) {
        if (lo != hi) throw ParameterError("single-point grid needs lo == hi");
        return {lo};
    }
    if (!(lo < hi)) throw ParameterError("grid needs lo < hi");
    if (scale == GridScale::logarithmic && !(lo > 0.0))
        throw ParameterError("logarithmic grid needs a positive lower bound");

    std::vector<double> out(static_cast<std::size_t>(steps));
    if (scale == GridScale::linear) {
        const double step = (hi - lo) / (steps - 1);
        for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + i * step;
    } else {
        const double log_lo = std::log(lo);
        const double step = (std::log(hi) - log_lo) / (steps - 1);
        for (int i = 0; i < steps; ++i)
            out[static_cast<std::size_t>(i)] = std::exp(log_lo + i * step);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

EpsilonSweep sweep(const Graph& g, const EpsilonGrid& grid, double tie_tol,
                   double solver_tol) {
    EpsilonSweep result;
    for (double epsilon : grid.points()) {
        CentralityVector x = generalized_degree_exact(g, epsilon, solver_tol);
        RankingResult ranking = rank(x, tie_tol);
        result.points.push_back({std::move(x), std::move(ranking)});
    }
    return result;
}

namespace {

std::vector<double> watershed_probes(double lo, double hi, int steps) {
    if (lo > 0.0) return EpsilonGrid{lo, hi, steps, GridScale::logarithmic}.points();
    // Zero start: pin the exact degree endpoint, then ramp logarithmically.
    std::vector<double> probes{0.0};
    const auto ramp =
        EpsilonGrid{hi * 1e-9, hi, steps - 1, GridScale::logarithmic}.points();
    probes.insert(probes.end(), ramp.begin(), ramp.end());
    return probes;
}

} // namespace

WatershedReport watersheds(const Graph& g, double eps_lo, double eps_hi,
                           int probe_steps, double refine_tol, double tie_tol) {
    if (!std::isfinite(eps_lo) || !std::isfinite(eps_hi) || eps_lo < 0.0 ||
        !(eps_lo < eps_hi))
        throw ParameterError("watershed range needs 0 <= lo < hi");
    if (probe_steps < 8) throw ParameterError("watershed needs at least 8 probes");
    if (!(refine_tol > 0.0)) throw ParameterError("refine tolerance must be positive");

    auto rank_at = [&](double epsilon) {
        return rank(generalized_degree_exact(g, epsilon), tie_tol);
    };

    const std::vector<double> probes = watershed_probes(eps_lo, eps_hi, probe_steps);
    std::vector<RankingResult> rankings;
    rankings.reserve(probes.size());
    for (double p : probes) rankings.push_back(rank_at(p));

    WatershedReport report;
    std::vector<std::size_t> interval_probe; // first probe of each interval
    interval_probe.push_back(0);

    for (std::size_t i = 0; i + 1 < probes.size(); ++i) {
        if (same_ranking(rankings[i], rankings[i + 1])) continue;
        double a = probes[i];
        double b = probes[i + 1];
        RankingResult at_a = rankings[i];
        while (b - a >= refine_tol) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            RankingResult at_mid = rank_at(mid);
            if (same_ranking(at_mid, at_a))
                a = mid;
            else
                b = mid;
        }
        report.boundaries.push_back(0.5 * (a + b));
        interval_probe.push_back(i + 1);
    }

    for (std::size_t t = 0; t < interval_probe.size(); ++t) {
        WatershedInterval interval;
        interval.lo = t == 0 ? probes.front() : report.boundaries[t - 1];
        interval.hi = t + 1 < interval_probe.size() ? report.boundaries[t]
                                                    : probes.back();
        interval.ranking = rankings[interval_probe[t]];
        report.intervals.push_back(std::move(interval));
    }
    return report;
}

std::string format_ranking(const RankingResult& ranking, const Graph& g) {
    std::ostringstream out;
    for (std::size_t t = 0; t < ranking.tie_groups.size(); ++t) {
        if (t) out << " > ";
        const auto& group = ranking.tie_groups[t];
        if (group.size() > 1) out << "(";
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i) out << " ~ ";
            out << g.label(group[i]);
        }
        if (group.size() > 1) out << ")";
    }
    return out.str();
}

std::string stable_ranking_intervals(const WatershedReport& report, const Graph& g) {
    std::ostringstream out;
    for (const auto& interval : report.intervals) {
        out << "[" << format_double(interval.lo) << ", " << format_double(interval.hi)
            << "]  " << format_ranking(interval.ranking, g) << "\n";
    }
    return out.str();
}

std::string to_csv(const EpsilonSweep& sweep, const Graph& g) {
    std::ostringstream out;
    out << "epsilon";
    for (const auto& label : g.labels()) out << "," << csv_escape(label);
    out << "\n";
    for (const auto& point : sweep.points) {
        out << format_double(point.centrality.epsilon);
        for (Eigen::Index i = 0; i < point.centrality.values.size(); ++i)
            out << "," << format_double(point.centrality.values(i));
        out << "\n";
    }
    return out.str();
}

std::string to_json(const WatershedReport& report, const Graph& g) {
    std::ostringstream out;
    out << "{\"boundaries\":[";
    for (std::size_t i = 0; i < report.boundaries.size(); ++i) {
        if (i) out << ",";
        out << format_double(report.boundaries[i]);
    }
    out << "],\"intervals\":[";
    for (std::size_t t = 0; t < report.intervals.size(); ++t) {
        if (t) out << ",";
        const auto& interval = report.intervals[t];
        out << "{\"lo\":" << format_double(interval.lo)
            << ",\"hi\":" << format_double(interval.hi) << ",\"ranking\":[";
        for (std::size_t gi = 0; gi < interval.ranking.tie_groups.size(); ++gi) {
            if (gi) out << ",";
            out << "[";
            const auto& group = interval.ranking.tie_groups[gi];
            for (std::size_t k = 0; k < group.size(); ++k) {
                if (k) out << ",";
                out << "\"" << json_escape(g.label(group[k])) << "\"";
            }
            out << "]";
        }
        out << "]}";
    }
    out << "]}";
    return out.str();
}

} // namespace gendeg
