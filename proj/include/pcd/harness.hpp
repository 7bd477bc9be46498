#pragma once

#include "pcd/graph.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/merge.hpp"
#include "pcd/skeleton.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace pcd {

struct SurveyCounts {
	int n = 0;
	int members = 0;
	int hanging_square = 0;
	int decomposable = 0;

	friend bool operator==(const SurveyCounts&, const SurveyCounts&) = default;
};

struct SurveyViolation {
	std::string graph6;
	std::string reason;

	friend bool operator==(const SurveyViolation&, const SurveyViolation&) = default;
};

struct SurveyReport {
	std::vector<SurveyCounts> per_n; // ascending n, only sizes that occur
	std::vector<SurveyViolation> violations;
	int skipped = 0; // inputs outside the class
	int fallback_count = 0;
	int merge_exhausted_count = 0;
	int gallai_checked = 0;      // members with at most 4 ceil(n/2) edges
	int gallai_within_bound = 0;
	// seconds per phase; left empty unless SurveyOptions::timing is set so that
	// reports stay byte-identical between runs
	std::map<std::string, double> timing;

	int members() const;
	int hanging_square() const;
	int decomposable() const;

	friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

struct SurveyOptions {
	bool gallai = true;
	bool timing = false;
	// graphs above this edge count skip the exact min-path check on the
	// hanging-square Gallai route
	int max_edges = 64;
};

// Runs recognition, the exact oracle and decompose_4pc on every input (plus the
// Gallai pipeline when enabled) and records every disagreement or invalid
// output as a violation. Inputs are processed in canonical order.
SurveyReport dichotomy_survey(const std::vector<Graph>& graphs, const SurveyOptions& options = {});

// ------------------------------------------------------------ random instances

using Rng = std::mt19937_64;

// Random skeleton with at most max_steps building paths on fresh ids starting at first_id.
BuildingSequence random_skeleton(Rng& rng, int max_steps, Vertex first_id = 0);
// Random hanging-square graph (skeleton with <= 4 steps plus bunches with k <= 3),
// returned as a recognized certificate; min_bunches squares-bearing bunches at least.
HangingSquareCertificate random_hanging_square(Rng& rng, int max_steps, int min_bunches, int max_bunches, Vertex first_id = 0);

// A random case satisfying the preconditions of `kind`; nullopt if sampling
// gave up (counted as a generator failure).
std::optional<MergeCase> random_merge_case(MergeKind kind, Rng& rng);
// A copy of a valid case broken so that some precondition fails.
MergeCase mutate_merge_case(const MergeCase& c, Rng& rng);

struct FuzzReport {
	MergeKind kind = MergeKind::two_cycles;
	std::uint64_t seed = 0;
	int trials = 0;
	int generated = 0;
	int valid = 0;
	int generator_failures = 0;
	int mutation_trials = 0;
	int mutations_rejected = 0;
	std::map<std::string, int> routes;
	std::vector<std::string> failures; // first few failure descriptions

	friend bool operator==(const FuzzReport&, const FuzzReport&) = default;
};

FuzzReport lemma_fuzz(MergeKind kind, int trials, std::uint64_t seed, int mutation_trials = 0);

} // namespace pcd
