#pragma once

#include <utility>
#include <vector>

#include "gendeg/graph.hpp"

// Programmatic copies of the fixture networks, labels "1".."n".
namespace fixtures {

using gendeg::Graph;

// Path 1-2-3-4 plus the isolated node 5.
inline Graph path_plus_isolated() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
}

// Path on five nodes.
inline Graph path5() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

// Six-node core: triangle 3-4-5 plus 4-6, 5-6; nodes 1 and 2 isolated.
inline Graph diamond_core() {
    return Graph::from_edges(6, {{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// Core plus both pendant edges 1-3 and 2-3.
inline Graph diamond_pendants() {
    return Graph::from_edges(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// Core plus the single pendant edge 1-3 (degrees 1,0,3,3,3,2).
inline Graph diamond_one_pendant() {
    return Graph::from_edges(6, {{0, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// The three degree-sequence-[4,2,2,1,1,1,1] networks.
inline Graph degree_seq_a() {
    return Graph::from_edges(7, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 6}});
}
inline Graph degree_seq_b() {
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {2, 6}});
}
inline Graph degree_seq_c() {
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {3, 6}});
}

// Six-node network whose balanced form carries loops [3,1,0,0,1,1].
inline Graph tailed_clique() {
    return Graph::from_edges(
        6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// 3-regular ring of eight nodes with chords 1-4, 2-5, 3-7, 6-8.
inline Graph chordal_ring8() {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                 {6, 7}, {7, 0}, {0, 3}, {1, 4}, {2, 6}, {5, 7}});
}

inline std::vector<Graph> all() {
    return {path_plus_isolated(),      path5(),      diamond_core(), diamond_pendants(),
            diamond_one_pendant(), degree_seq_a(), degree_seq_b(),     degree_seq_c(),
            tailed_clique(),   chordal_ring8()};
}

} // namespace fixtures
