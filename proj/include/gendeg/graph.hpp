#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gendeg/errors.hpp"

namespace gendeg {

/// Unweighted, undirected, loop-free graph over a fixed node set.
///
/// Nodes carry external string labels and are addressed internally by
/// dense indices 0..n-1. All structural data is integer-exact; nothing
/// here touches floating point. Instances are immutable: edit
/// operations return new graphs.
class Graph {
public:
    /// Builds a graph from explicit labels and a 0/1 adjacency matrix.
    /// Throws ParseError if the labels are not unique and non-empty, or
    /// ParameterError if the adjacency is not symmetric and loop-free.
    Graph(std::vector<std::string> labels, Eigen::MatrixXi adjacency);

    /// Parses an edge list: one edge per line as two whitespace-separated
    /// labels, '#' starting a comment line, blank lines ignored. An
    /// optional "%nodes: a,b,c" directive declares the full node set and
    /// fixes the index order; otherwise nodes are indexed in first
    /// appearance order followed by `isolated` labels. Duplicate edges are
    /// deduplicated silently; a self-loop line is an error.
    static Graph parse_edge_list(std::string_view text,
                                 const std::vector<std::string>& isolated = {});

    /// Graph on n nodes labeled "1".."n" with the given index edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph star(int n);     // center at index 0
    static Graph path(int n);
    static Graph cycle(int n);    // requires n >= 3
    static Graph complete(int n);

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const;
    bool has_edge(int i, int j) const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(std::string_view label) const;

    const Eigen::MatrixXi& adjacency() const { return adjacency_; }

    /// New graph with node i moved to position perm[i] (perm is a
    /// permutation of 0..n-1). Labels travel with their nodes.
    Graph relabeled(const std::vector<int>& perm) const;

    bool same_adjacency(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    Eigen::MatrixXi adjacency_;
};

/// Degrees plus their extremes.
struct DegreeVector {
    std::vector<int> values;
    int max_degree = 0;
    int min_degree = 0;
};

DegreeVector degree(const Graph& g);

/// L with l_ij = -a_ij off the diagonal and l_ii = d_i.
Eigen::MatrixXi laplacian(const Graph& g);

/// C = max_degree * I - L: the adjacency of the loop-balanced graph.
/// Every row sums to the maximum degree; at least one diagonal entry is zero.
Eigen::MatrixXi balanced_adjacency(const Graph& g);

/// Connected components as blocks of node indices, each block sorted,
/// blocks ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// Subgraph induced by `nodes` (indices into g), in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes);

/// Copy of g with the edge {i,j} added. Throws EdgeStateError if i == j
/// or the edge already exists.
Graph add_edge(const Graph& g, int i, int j);

/// Copy of g with the edge {i,j} removed. Throws EdgeStateError if
/// i == j or the edge is absent.
Graph remove_edge(const Graph& g, int i, int j);

/// All unordered pairs {i,j} for which some adjacency-preserving
/// permutation swaps i and j. Brute-force search with degree pruning;
/// refuses graphs with more than 12 nodes (test utility, not a feature).
std::vector<std::pair<int, int>> symmetric_pairs(const Graph& g);

} // namespace gendeg
