#pragma once

#include "pcd/graph.hpp"
#include "pcd/skeleton.hpp"

#include <optional>

namespace pcd {

// k edge-disjoint squares a-m-b-m' sharing the non-adjacent joints a, b.
struct Bunch {
	Vertex a = 0;
	Vertex b = 0;
	std::vector<Walk> squares;            // cycles written [a, m, b, m']
	std::vector<Vertex> identified_joints; // joints lying on the skeleton, sorted

	int k() const noexcept { return static_cast<int>(squares.size()); }
	EdgeList edges() const;
	std::vector<Vertex> vertices() const;

	friend bool operator==(const Bunch&, const Bunch&) = default;
};

enum class OccupiedAt { x0_x2, x1_x3 };

// A 2-bunch sitting on a brrb-path x0x1x2x3 of the skeleton.
struct OccupationRecord {
	Walk path;
	OccupiedAt at = OccupiedAt::x0_x2;
	int bunch = 0; // index into HangingSquareCertificate::bunches

	friend bool operator==(const OccupationRecord&, const OccupationRecord&) = default;
};

struct HangingSquareCertificate {
	BuildingSequence skeleton;
	std::vector<Bunch> bunches;
	std::vector<OccupationRecord> occupations;

	EdgeList edges() const;

	friend bool operator==(const HangingSquareCertificate&, const HangingSquareCertificate&) = default;
};

// 4-cycles with exactly two or three vertices of degree 2, each listed once
// starting at its smallest vertex, second vertex smaller than the last.
std::vector<Walk> find_good_squares(const Graph& g);

// For every joint pair suggested by a good square: the bunch formed by all
// degree-2 common neighbours of the pair, paired off in increasing order (an
// odd leftover is dropped). Joints that keep edges outside the bunch are
// reported as identified.
std::vector<Bunch> find_maximal_bunches(const Graph& g);

// Throws not_in_class_g. nullopt is a sound rejection.
std::optional<HangingSquareCertificate> recognize_hanging_square(const Graph& g);
// Same search on an arbitrary edge set, without the class check.
std::optional<HangingSquareCertificate> find_hs_certificate(const EdgeList& edges);

Verdict verify_hs_certificate(const Graph& g, const HangingSquareCertificate& cert);
Verdict verify_hs_certificate(const EdgeList& edges, const HangingSquareCertificate& cert);

// Start 3-path, building paths and bunch squares; min_length 3.
// Throws unverified_certificate.
Decomposition hs_canonical_decomposition(const HangingSquareCertificate& cert);

} // namespace pcd
