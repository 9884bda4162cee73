#include "gendeg/random_graphs.hpp"

#include <utility>
#include <vector>

namespace gendeg {

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_below(std::mt19937_64& rng, int k) {
    if (k <= 0) throw ParameterError("uniform_below needs a positive bound");
    return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

Graph erdos_renyi(std::mt19937_64& rng, int n, double p) {
    if (n < 1) throw ParameterError("graph needs at least one node");
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must be in [0,1]");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph random_graph(std::mt19937_64& rng, int n) {
    static constexpr double kProbabilities[] = {0.2, 0.5, 0.8};
    return erdos_renyi(rng, n, kProbabilities[uniform_below(rng, 3)]);
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
    Graph g = random_graph(rng, n);
    auto blocks = components(g);
    while (blocks.size() > 1) {
        const auto& a = blocks[static_cast<std::size_t>(uniform_below(
            rng, static_cast<int>(blocks.size())))];
        const std::vector<int>* b = &a;
        while (b == &a)
            b = &blocks[static_cast<std::size_t>(uniform_below(
                rng, static_cast<int>(blocks.size())))];
        const int u = a[static_cast<std::size_t>(uniform_below(rng, static_cast<int>(a.size())))];
        const int v = (*b)[static_cast<std::size_t>(uniform_below(rng, static_cast<int>(b->size())))];
        g = add_edge(g, u, v);
        blocks = components(g);
    }
    return g;
}

} // namespace gendeg
