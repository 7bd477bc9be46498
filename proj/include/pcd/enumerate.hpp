#pragma once

#include "pcd/graph.hpp"
#include "pcd/skeleton.hpp"

#include <cstdint>
#include <string>

namespace pcd {

inline constexpr int kEnumerateVertexLimit = 8;
inline constexpr int kCanonicalVertexLimit = 11;

// Lexicographically smallest upper-triangle adjacency bitstring over all
// relabellings that keep vertices sorted by (degree, neighbour degrees).
struct CanonicalForm {
	int n = 0;
	std::uint64_t code = 0;
	std::vector<Vertex> order; // order[i] = original vertex placed at position i

	auto operator<=>(const CanonicalForm& o) const { return std::tie(n, code) <=> std::tie(o.n, o.code); }
	bool operator==(const CanonicalForm& o) const { return n == o.n && code == o.code; }
};

// throws too_large above kCanonicalVertexLimit vertices
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// One representative per isomorphism class of connected triangle-free graphs
// with odd distance >= 3 and at least one edge, on at most n_max vertices,
// ordered by (vertex count, edge count, canonical code) and canonically labelled.
// throws too_large for n_max > kEnumerateVertexLimit
std::vector<Graph> enumerate_class_g(int n_max);

// every connected triangle-free graph on exactly n vertices (no class filter)
std::vector<Graph> enumerate_connected_triangle_free(int n);

// One tree per isomorphism class with 1..max_edges edges, ordered by edge count
// and then by rooted canonical string.
std::vector<Graph> enumerate_trees(int max_edges);
std::string tree_canonical_string(const Graph& t);

// One building sequence per isomorphism class of skeletons with at most
// max_edges edges, grown step by step from the 3-path; vertices 0..n-1.
std::vector<BuildingSequence> enumerate_skeletons(int max_edges);

} // namespace pcd
