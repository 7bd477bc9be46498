#pragma once

#include "pcd/graph.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/skeleton.hpp"

#include <optional>
#include <string>
#include <variant>

namespace pcd {

enum class Provenance { constructive, oracle_fallback };
std::string provenance_name(Provenance p);

// Exactly one of decomposition / certificate is set.
struct DichotomyResult {
	std::optional<Decomposition> decomposition;
	std::optional<HangingSquareCertificate> certificate;
	Provenance provenance = Provenance::constructive;
	// reductions and merges applied, outermost first, e.g. "cycle", "HS+LongCycle:explicit"
	std::vector<std::string> trace;

	bool decomposable() const noexcept { return decomposition.has_value(); }
};

using TreeResult = std::variant<Decomposition, BuildingSequence>;

// Skeleton sequence, or a 4-pc decomposition (all paths) built by leaf
// extension, removal of leaf-to-leaf paths and splitting at a 3-path.
// Throws not_a_tree, not_in_class_g.
TreeResult decompose_tree(const Graph& t);

// Trees go through decompose_tree; cyclic graphs through cycle removal and the
// merge constructions, with the exact oracle as a tagged last resort.
// Throws not_in_class_g, too_large (fallback beyond the oracle limit),
// dichotomy_violation (neither a decomposition nor a certificate found).
DichotomyResult decompose_4pc(const Graph& g);

} // namespace pcd
