#pragma once

#include "pcd/graph.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/skeleton.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pcd {

// Gluing constructions: each takes a graph that is "almost" hanging-square
// (a host plus one extra element) and produces a 4-pc decomposition.
enum class MergeKind {
	hs_long_cycle,            // hanging-square H + cycle of length >= 5 meeting T_H
	hs_square_cycle,          // H + cycle meeting V(Q) \ V(T_H) for a square Q of H
	skeleton_last_path_cycle, // skeleton T with last building path P + square C
	hs_short_path,            // H + path of length 4..7 meeting H only inside V(Q) \ V(T_H)
	two_basis,                // two (3-path + square) hanging-square graphs glued on square vertices
	tree_path,                // skeleton T + path of length >= 4 hanging at an inner vertex
	hs_two_squares,           // H + square C where [H - E(Q)] + C is hanging-square
	cycle_path,               // cycle + path of length <= 7, split into exactly two paths
	two_cycles,               // two cycles of length 4..7 sharing vertices
};

inline constexpr std::array<MergeKind, 9> kAllMergeKinds{
	MergeKind::hs_long_cycle,  MergeKind::hs_square_cycle, MergeKind::skeleton_last_path_cycle,
	MergeKind::hs_short_path,  MergeKind::two_basis,       MergeKind::tree_path,
	MergeKind::hs_two_squares, MergeKind::cycle_path,      MergeKind::two_cycles,
};

// "HS+LongCycle", "Tree+Path", ...
std::string merge_kind_name(MergeKind kind);
std::optional<MergeKind> parse_merge_kind(std::string_view name);

// Which fields are read depends on the kind:
//   hs_long_cycle            host, attached (C)
//   hs_square_cycle          host, square (Q), attached (C)
//   skeleton_last_path_cycle skeleton (T, last step is P), attached (square C)
//   hs_short_path            host, square (Q), attached (path P')
//   two_basis                host (H), second_host (H')
//   tree_path                skeleton (T), attached (path P)
//   hs_two_squares           host, square (Q), attached (square C)
//   cycle_path               base (cycle C), attached (path P)
//   two_cycles               base (cycle C), attached (cycle C')
struct MergeCase {
	MergeKind kind = MergeKind::two_cycles;
	std::optional<HangingSquareCertificate> host;
	std::optional<HangingSquareCertificate> second_host;
	std::optional<BuildingSequence> skeleton;
	std::optional<Walk> square;
	std::optional<Walk> base;
	Walk attached;

	// every edge of the union, sorted
	EdgeList edges() const;
};

struct MergeResult {
	Decomposition decomposition;
	// "explicit" for a direct construction, "core" when the reduced core
	// P0 + attachments was solved by search, "core+ring" / "full" when the core
	// had to be widened
	std::string route;
};

Verdict check_merge_preconditions(const MergeCase& c);

// Throws precondition_violated; throws merge_exhausted if no construction
// succeeds (not expected when the preconditions hold).
MergeResult lemma_merge_detailed(const MergeCase& c);
Decomposition lemma_merge(const MergeCase& c);

// Two paths (of any length) covering a cycle and a path that share a vertex;
// nullopt if no such split exists. Edge count is capped at kOracleEdgeLimit.
std::optional<Decomposition> split_into_two_paths(const EdgeList& edges);

} // namespace pcd
