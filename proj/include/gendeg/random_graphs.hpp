#pragma once

#include <random>

#include "gendeg/graph.hpp"

namespace gendeg {

/// Deterministic uniform draws built directly on the engine output, so
/// seeded suites reproduce across standard-library implementations.
double uniform_unit(std::mt19937_64& rng);
int uniform_below(std::mt19937_64& rng, int k); // in [0, k)

/// Erdos-Renyi sample with the given edge probability; labels "1".."n".
Graph erdos_renyi(std::mt19937_64& rng, int n, double p);

/// Erdos-Renyi with edge probability drawn uniformly from {0.2, 0.5, 0.8}.
Graph random_graph(std::mt19937_64& rng, int n);

/// Like random_graph, then joins components with random edges until the
/// graph is connected.
Graph random_connected_graph(std::mt19937_64& rng, int n);

} // namespace gendeg
