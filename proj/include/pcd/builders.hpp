#pragma once

#include "pcd/graph.hpp"
#include "pcd/skeleton.hpp"

namespace pcd {

// path 0-1-...-k with k edges
Graph path_graph(int edges);
// cycle 0-1-...-(n-1)-0
Graph cycle_graph(int n);
// centre 0, leaves 1..k
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

// Edge set produced by replaying a building sequence.
Graph skeleton_graph(const BuildingSequence& seq);

} // namespace pcd
