#include "gendeg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gendeg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

Graph::Graph(std::vector<std::string> labels, Eigen::MatrixXi adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
    const int n = static_cast<int>(labels_.size());
    if (n < 1) throw ParameterError("graph needs at least one node");
    if (adjacency_.rows() != n || adjacency_.cols() != n)
        throw ParameterError("adjacency size does not match the label count");

    std::unordered_map<std::string_view, int> seen;
    for (const auto& label : labels_) {
        if (label.empty()) throw ParseError("empty node label");
        if (!seen.emplace(label, 1).second)
            throw ParseError("duplicate node label '" + label + "'");
    }
    for (int i = 0; i < n; ++i) {
        if (adjacency_(i, i) != 0)
            throw ParameterError("loop on node '" + labels_[static_cast<std::size_t>(i)] + "'");
        for (int j = 0; j < n; ++j) {
            const int a = adjacency_(i, j);
            if (a != 0 && a != 1) throw ParameterError("adjacency entries must be 0 or 1");
            if (a != adjacency_(j, i)) throw ParameterError("adjacency must be symmetric");
        }
    }
}

Graph Graph::parse_edge_list(std::string_view text,
                             const std::vector<std::string>& isolated) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    bool order_fixed = false;

    auto intern = [&](const std::string& label, int line) -> int {
        if (label.empty()) throw ParseError("empty node label", line);
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        if (order_fixed)
            throw ParseError("node '" + label + "' is not in the declared %nodes set", line);
        const int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    };

    std::vector<std::pair<int, int>> edges;
    std::string line;
    std::istringstream in{std::string(text)};
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        if (body.rfind("%nodes:", 0) == 0) {
            if (order_fixed) throw ParseError("repeated %nodes directive", lineno);
            if (!labels.empty())
                throw ParseError("%nodes directive must precede all edges", lineno);
            std::string rest = body.substr(7);
            std::size_t start = 0;
            while (true) {
                std::size_t comma = rest.find(',', start);
                std::string label = trim(rest.substr(start, comma - start));
                if (label.empty()) throw ParseError("empty node label in %nodes", lineno);
                intern(label, lineno);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            order_fixed = true;
            continue;
        }
        const auto tokens = split_ws(body);
        if (tokens.size() != 2)
            throw ParseError("expected two node labels, got " +
                                 std::to_string(tokens.size()),
                             lineno);
        if (tokens[0] == tokens[1])
            throw ParseError("self-loop on node '" + tokens[0] + "'", lineno);
        const int first = intern(tokens[0], lineno);
        const int second = intern(tokens[1], lineno);
        edges.emplace_back(first, second);
    }

    for (const auto& label : isolated) {
        if (label.empty()) throw ParseError("empty node label");
        if (index.count(label)) continue; // already present, nothing to add
        if (order_fixed)
            throw ParseError("node '" + label + "' is not in the declared %nodes set");
        index.emplace(label, static_cast<int>(labels.size()));
        labels.push_back(label);
    }

    const int n = static_cast<int>(labels.size());
    if (n < 1) throw ParseError("edge list declares no nodes");
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (auto [i, j] : edges) a(i, j) = a(j, i) = 1;
    return Graph(std::move(labels), std::move(a));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw ParameterError("graph needs at least one node");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParameterError("edge endpoint out of range");
        if (i == j) throw EdgeStateError("loops are not allowed");
        a(i, j) = a(j, i) = 1;
    }
    return Graph(std::move(labels), std::move(a));
}

Graph Graph::star(int n) {
    if (n < 1) throw ParameterError("star size must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return from_edges(n, edges);
}

Graph Graph::path(int n) {
    if (n < 1) throw ParameterError("path size must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(n, edges);
}

Graph Graph::cycle(int n) {
    if (n < 1) throw ParameterError("cycle size must be positive");
    if (n < 3) throw ParameterError("cycle needs at least three nodes");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges);
}

Graph Graph::complete(int n) {
    if (n < 1) throw ParameterError("complete graph size must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges);
}

int Graph::edge_count() const { return adjacency_.sum() / 2; }

bool Graph::has_edge(int i, int j) const {
    return adjacency_(i, j) != 0;
}

std::optional<int> Graph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    const int n = node_count();
    if (static_cast<int>(perm.size()) != n)
        throw ParameterError("permutation size does not match the graph");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
            throw ParameterError("not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            labels_[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) =
                adjacency_(i, j);
    }
    return Graph(std::move(labels), std::move(a));
}

bool Graph::same_adjacency(const Graph& other) const {
    return adjacency_ == other.adjacency_;
}

DegreeVector degree(const Graph& g) {
    DegreeVector d;
    const int n = g.node_count();
    d.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        d.values[static_cast<std::size_t>(i)] = g.adjacency().row(i).sum();
    d.max_degree = *std::max_element(d.values.begin(), d.values.end());
    d.min_degree = *std::min_element(d.values.begin(), d.values.end());
    return d;
}

Eigen::MatrixXi laplacian(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXi l = -g.adjacency();
    for (int i = 0; i < n; ++i) l(i, i) = g.adjacency().row(i).sum();
    return l;
}

Eigen::MatrixXi balanced_adjacency(const Graph& g) {
    const int dmax = degree(g).max_degree;
    Eigen::MatrixXi c = dmax * Eigen::MatrixXi::Identity(g.node_count(), g.node_count());
    c -= laplacian(g);
    return c;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int blocks = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = blocks;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (g.adjacency()(u, v) != 0 && comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = blocks;
                    stack.push_back(v);
                }
            }
        }
        ++blocks;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
    const int m = static_cast<int>(nodes.size());
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (int v : nodes) labels.push_back(g.label(v));
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a(i, j) = g.adjacency()(nodes[static_cast<std::size_t>(i)],
                                    nodes[static_cast<std::size_t>(j)]);
    return Graph(std::move(labels), std::move(a));
}

Graph add_edge(const Graph& g, int i, int j) {
    if (i == j) throw EdgeStateError("loops are not allowed");
    if (g.has_edge(i, j))
        throw EdgeStateError("edge {" + g.label(i) + "," + g.label(j) + "} already present");
    Eigen::MatrixXi a = g.adjacency();
    a(i, j) = a(j, i) = 1;
    return Graph(g.labels(), std::move(a));
}

Graph remove_edge(const Graph& g, int i, int j) {
    if (i == j) throw EdgeStateError("loops are not allowed");
    if (!g.has_edge(i, j))
        throw EdgeStateError("edge {" + g.label(i) + "," + g.label(j) + "} not present");
    Eigen::MatrixXi a = g.adjacency();
    a(i, j) = a(j, i) = 0;
    return Graph(g.labels(), std::move(a));
}

namespace {

// Backtracking search for an automorphism with sigma(i)=j and sigma(j)=i.
// Candidates are pruned by degree and by adjacency consistency against
// the already-assigned prefix.
bool swap_automorphism_exists(const Graph& g, int i, int j) {
    const int n = g.node_count();
    const auto deg = degree(g).values;
    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    sigma[static_cast<std::size_t>(i)] = j;
    sigma[static_cast<std::size_t>(j)] = i;
    used[static_cast<std::size_t>(j)] = true;
    used[static_cast<std::size_t>(i)] = true;

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (v != i && v != j) order.push_back(v);

    auto consistent = [&](int v, int image) {
        for (int u = 0; u < n; ++u) {
            const int su = sigma[static_cast<std::size_t>(u)];
            if (su < 0) continue;
            if (g.adjacency()(v, u) != g.adjacency()(image, su)) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const int v = order[depth];
        for (int image = 0; image < n; ++image) {
            if (used[static_cast<std::size_t>(image)]) continue;
            if (deg[static_cast<std::size_t>(image)] != deg[static_cast<std::size_t>(v)])
                continue;
            if (!consistent(v, image)) continue;
            sigma[static_cast<std::size_t>(v)] = image;
            used[static_cast<std::size_t>(image)] = true;
            if (assign(depth + 1)) return true;
            sigma[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(image)] = false;
        }
        return false;
    };

    return assign(0);
}

} // namespace

std::vector<std::pair<int, int>> symmetric_pairs(const Graph& g) {
    const int n = g.node_count();
    if (n > 12)
        throw SizeLimitError("symmetric_pairs is limited to 12 nodes");
    const auto deg = degree(g).values;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (deg[static_cast<std::size_t>(i)] != deg[static_cast<std::size_t>(j)])
                continue;
            if (swap_automorphism_exists(g, i, j)) out.emplace_back(i, j);
        }
    return out;
}

} // namespace gendeg
