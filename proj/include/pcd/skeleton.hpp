#pragma once

#include "pcd/graph.hpp"

#include <optional>

namespace pcd {

// A 4-path or 6-path x0..xk whose middle vertex x_{k/2} is the joint.
struct BuildingPath {
	std::vector<Vertex> vertices;

	int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
	int joint_index() const noexcept { return length() / 2; }
	Vertex joint() const { return vertices.at(static_cast<size_t>(joint_index())); }
	Walk walk() const { return Walk::path(vertices); }

	friend bool operator==(const BuildingPath&, const BuildingPath&) = default;
};

// Start 3-path followed by building paths, replayed in order.
struct BuildingSequence {
	std::vector<Vertex> start;
	std::vector<BuildingPath> steps;

	EdgeList edges() const;
	std::vector<Vertex> vertices() const;
	// the prefix with the first `count` steps
	BuildingSequence prefix(size_t count) const;

	friend bool operator==(const BuildingSequence&, const BuildingSequence&) = default;
};

struct PathSplit {
	Walk left;  // x0 .. joint
	Walk right; // joint .. xk
};

PathSplit split_building_path(const BuildingPath& bp);

// Replays the sequence in isolation: distinct/fresh vertices, lengths, joint on
// the current tree and a conflict-free black/red assignment.
Verdict check_sequence_structure(const BuildingSequence& seq);

// Structure check plus exact edge-set equality with t and agreement of the
// prescribed colours with the parity colouring of t.
Verdict verify_building_sequence(const Graph& t, const BuildingSequence& seq);
// Same, for a tree given as an edge set in a larger id space.
Verdict verify_building_sequence(const EdgeList& tree_edges, const BuildingSequence& seq);

// Backtracking peel; nullopt means no building sequence exists. Throws not_a_tree.
std::optional<BuildingSequence> recognize_skeleton(const Graph& t);
std::optional<BuildingSequence> recognize_skeleton(const EdgeList& tree_edges);

// A building sequence of t starting at p (in p's orientation).
// Throws not_a_brrb_path, not_skeleton.
BuildingSequence reroot_sequence(const Graph& t, const Walk& p);
// Reroot a known sequence; p must be a brrb-path of the tree it builds.
BuildingSequence reroot_sequence(const BuildingSequence& seq, const Walk& p);

// brrb-paths of a tree given as an edge set (host ids, parity taken in that tree)
std::vector<Walk> brrb_paths(const EdgeList& tree_edges);

BuildingSequence relabeled(const BuildingSequence& seq, const std::vector<Vertex>& to_host);

} // namespace pcd
