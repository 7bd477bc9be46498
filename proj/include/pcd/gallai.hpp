#pragma once

#include "pcd/graph.hpp"

#include <string>

namespace pcd {

enum class GallaiRoute { direct, hs_fallback, cycle_graph };
std::string gallai_route_name(GallaiRoute r);

struct GallaiResult {
	Decomposition paths; // every element a path, min_length 1
	int bound = 0;       // ceil(n / 2)
	bool within_bound = false;
	GallaiRoute route = GallaiRoute::direct;
	int merges = 0; // cycle eliminations performed
};

// Path decomposition with at most ceil(n/2) paths for a graph of the class with
// at most 4 ceil(n/2) edges. Throws not_in_class_g, edge_bound_violated,
// merge_exhausted, too_large (hanging-square input above kMinPathEdgeLimit edges).
GallaiResult gallai_decomposition(const Graph& g);

} // namespace pcd
