#pragma once

#include "pcd/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace pcd {

using Vertex = int;

// distance value used when no pair of odd vertices exists (or they are in
// different components)
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// unordered vertex pair, always stored with u < v
struct Edge {
	Vertex u = 0;
	Vertex v = 0;

	Edge() = default;
	Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

	bool has(Vertex x) const noexcept { return u == x || v == x; }
	Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

	auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

// Simple undirected graph on the dense vertex ids 0..n-1. Immutable once built;
// edges are kept sorted so edge ids are stable for a given edge set.
class Graph {
public:
	Graph() = default;
	explicit Graph(int vertex_count);
	// throws self_loop, duplicate_edge or invalid_graph (endpoint out of range)
	Graph(int vertex_count, EdgeList edges);

	int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
	int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

	const EdgeList& edges() const noexcept { return edges_; }
	const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<size_t>(v)); }
	int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

	bool has_edge(Vertex a, Vertex b) const;
	// index into edges(), or -1
	int edge_id(Vertex a, Vertex b) const;

	friend bool operator==(const Graph&, const Graph&) = default;

private:
	EdgeList edges_;
	std::vector<std::vector<Vertex>> adjacency_;
};

// Graph on 0..max endpoint; used for edge sets that live in a shared id space.
Graph graph_from_edges(const EdgeList& edges, int min_vertex_count = 0);

enum class WalkKind { path, cycle };

// A path or cycle given by its vertex sequence. Cycles do not repeat the first
// vertex at the end.
struct Walk {
	WalkKind kind = WalkKind::path;
	std::vector<Vertex> vertices;

	static Walk path(std::vector<Vertex> vs) { return {WalkKind::path, std::move(vs)}; }
	static Walk cycle(std::vector<Vertex> vs) { return {WalkKind::cycle, std::move(vs)}; }

	bool is_cycle() const noexcept { return kind == WalkKind::cycle; }
	int length() const noexcept;
	EdgeList edges() const;
	bool contains(Vertex v) const;
	Vertex front() const { return vertices.front(); }
	Vertex back() const { return vertices.back(); }

	friend bool operator==(const Walk&, const Walk&) = default;
};

// structural check only: no repeated vertex, cycles have length >= 3
bool is_simple(const Walk& w);
Walk reversed(const Walk& w);
// a path with the given ends (either order) reoriented to start at `first`
Walk oriented_from(const Walk& p, Vertex first);

struct Decomposition {
	std::vector<Walk> elements;
	int min_length = 4;

	friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Boolean outcome with human-readable reasons for a negative answer.
struct Verdict {
	bool ok = true;
	std::vector<std::string> reasons;

	void fail(std::string reason) {
		ok = false;
		reasons.push_back(std::move(reason));
	}
	explicit operator bool() const noexcept { return ok; }
};

enum class Color { black, red };

struct ParityColoring {
	std::vector<Color> color;

	bool is_black(Vertex v) const { return color.at(static_cast<size_t>(v)) == Color::black; }
};

struct ClassGReport {
	bool connected = false;
	bool triangle_free = false;
	int odd_distance = kInfinity;
	bool member = false;

	friend bool operator==(const ClassGReport&, const ClassGReport&) = default;
};

enum class ArcSide { shortest, longest, first };

// ---- basic properties ----
bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_acyclic(const Graph& g);
bool is_tree(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);
int odd_distance(const Graph& g);
ClassGReport class_g_report(const Graph& g);
inline bool in_class_g(const Graph& g) { return class_g_report(g).member; }

// throws not_a_tree
ParityColoring parity_coloring(const Graph& t);
// every black-red-red-black 3-path, oriented so front() < back(), sorted
std::vector<Walk> brrb_paths(const Graph& t);
bool is_brrb_path(const Graph& t, const Walk& p);

Verdict validate_decomposition(const Graph& g, const Decomposition& d);

// throws vertex_not_on_walk
Walk subpath(const Walk& w, Vertex x, Vertex y, ArcSide side = ArcSide::shortest);

// ---- edge-set helpers (all in one shared vertex id space) ----
EdgeList sorted_edges(EdgeList edges);
EdgeList edge_union(const EdgeList& a, const EdgeList& b);
EdgeList edge_difference(const EdgeList& a, const EdgeList& b);
bool edges_disjoint(const EdgeList& a, const EdgeList& b);
std::vector<Vertex> edge_vertices(const EdgeList& edges);
// connected pieces of an edge set, each sorted, ordered by smallest edge
std::vector<EdgeList> edge_components(const EdgeList& edges);

// Compact relabelling of an edge set: vertices that carry an edge are renumbered
// 0..k-1 in increasing order of their host id.
struct Subgraph {
	Graph graph;
	std::vector<Vertex> to_host;

	Walk lift(const Walk& w) const;
	Decomposition lift(const Decomposition& d) const;
};
Subgraph edge_subgraph(const EdgeList& edges);

} // namespace pcd
