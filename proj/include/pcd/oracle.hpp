#pragma once

#include "pcd/graph.hpp"

#include <cstdint>
#include <optional>

namespace pcd {

inline constexpr int kOracleEdgeLimit = 64;
inline constexpr int kMinPathEdgeLimit = 20;

// Exhaustive edge-partition search. Elements are anchored at the lowest
// uncovered edge; every element through that edge is tried in a fixed order.
struct SearchOptions {
	int min_length = 4;
	bool allow_cycles = true;
	bool allow_paths = true;
	int max_elements = -1;      // -1: unbounded
	bool longest_first = false; // default order: cycles, then paths, shorter first
	bool memoize_failures = false;
};

// throws too_large when the graph has more than kOracleEdgeLimit edges
std::optional<Decomposition> search_decomposition(const Graph& g, const SearchOptions& options);
std::optional<Decomposition> search_decomposition(const EdgeList& edges, const SearchOptions& options);

struct OracleOptions {
	bool memoize_failures = false;
};

// A 4-pc decomposition if one exists, otherwise nullopt (infeasible).
std::optional<Decomposition> decompose_4pc_exact(const Graph& g, const OracleOptions& options = {});
std::optional<Decomposition> decompose_4pc_exact(const EdgeList& edges, const OracleOptions& options = {});

struct MinPathResult {
	int k = 0;
	Decomposition paths; // min_length = 1
};

// Minimum number of paths partitioning E(g). Throws too_large above kMinPathEdgeLimit edges.
MinPathResult min_path_decomposition_exact(const Graph& g);

// sum over edge components of max(1, odd vertices / 2)
int path_count_lower_bound(const Graph& g);

} // namespace pcd
