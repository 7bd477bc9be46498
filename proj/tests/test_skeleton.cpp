#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/oracle.hpp"
#include "pcd/skeleton.hpp"
#include "support.hpp"

using namespace pcd;
using testsupport::make;

namespace {

// start 0-1-2-3, 4-path 4-5-1-6-7 at red x1, 6-path 8-9-10-3-11-12-13 at black x3
const BuildingSequence kTwoStep{{0, 1, 2, 3}, {{{4, 5, 1, 6, 7}}, {{8, 9, 10, 3, 11, 12, 13}}}};

Graph random_tree(std::mt19937_64& rng, int n) {
	// Pruefer decoding
	std::vector<int> code(static_cast<size_t>(n - 2));
	std::uniform_int_distribution<int> pick(0, n - 1);
	for (int& c : code) c = pick(rng);
	std::vector<int> degree(static_cast<size_t>(n), 1);
	for (int c : code) ++degree[static_cast<size_t>(c)];
	EdgeList es;
	for (int c : code) {
		for (int leaf = 0; leaf < n; ++leaf)
			if (degree[static_cast<size_t>(leaf)] == 1) {
				es.emplace_back(leaf, c);
				--degree[static_cast<size_t>(leaf)];
				--degree[static_cast<size_t>(c)];
				break;
			}
	}
	std::vector<int> last;
	for (int v = 0; v < n; ++v)
		if (degree[static_cast<size_t>(v)] == 1) last.push_back(v);
	es.emplace_back(last[0], last[1]);
	return Graph(n, es);
}

} // namespace

TEST_SUITE("skeleton") {

TEST_CASE("building sequence verification") {
	CHECK(verify_building_sequence(path_graph(3), {{0, 1, 2, 3}, {}}).ok);
	CHECK_FALSE(verify_building_sequence(path_graph(4), {{0, 1, 2, 3}, {}}).ok);
	CHECK_FALSE(verify_building_sequence(path_graph(4), {{1, 2, 3, 4}, {}}).ok);
	Graph one = make(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 1}, {1, 6}, {6, 7}});
	CHECK(verify_building_sequence(one, {{0, 1, 2, 3}, {{{4, 5, 1, 6, 7}}}}).ok);
	// a 4-path attached at a black vertex breaks the colouring
	Graph bad = make(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 0}, {0, 6}, {6, 7}});
	CHECK_FALSE(verify_building_sequence(bad, {{0, 1, 2, 3}, {{{4, 5, 0, 6, 7}}}}).ok);
	Graph two = skeleton_graph(kTwoStep);
	CHECK(verify_building_sequence(two, kTwoStep).ok);
	BuildingSequence reused = kTwoStep;
	reused.steps[1].vertices[0] = 4;
	CHECK_FALSE(check_sequence_structure(reused).ok);
}

TEST_CASE("recognition examples") {
	auto p3 = recognize_skeleton(path_graph(3));
	REQUIRE(p3);
	CHECK(p3->steps.empty());
	CHECK_FALSE(recognize_skeleton(path_graph(7)));
	CHECK_FALSE(recognize_skeleton(path_graph(4)));
	CHECK_THROWS_AS(recognize_skeleton(cycle_graph(4)), not_a_tree);
	Graph two = skeleton_graph(kTwoStep);
	auto seq = recognize_skeleton(two);
	REQUIRE(seq);
	CHECK(seq->steps.size() == 2);
	CHECK(verify_building_sequence(two, *seq).ok);
	// the same tree with one leaf moved is no longer a skeleton
	Graph moved = make(14, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 1}, {1, 6}, {6, 7}, {8, 9}, {9, 10}, {10, 3}, {3, 11}, {11, 12}, {11, 13}});
	CHECK_FALSE(recognize_skeleton(moved));
}

TEST_CASE("splitting building paths") {
	PathSplit four = split_building_path({{0, 1, 2, 3, 4}});
	CHECK(four.left.vertices == std::vector<Vertex>{0, 1, 2});
	CHECK(four.right.vertices == std::vector<Vertex>{2, 3, 4});
	PathSplit six = split_building_path({{0, 1, 2, 3, 4, 5, 6}});
	CHECK(six.left.vertices == std::vector<Vertex>{0, 1, 2, 3});
	CHECK(six.right.vertices == std::vector<Vertex>{3, 4, 5, 6});
	CHECK(edge_union(six.left.edges(), six.right.edges()) == sorted_edges(Walk::path({0, 1, 2, 3, 4, 5, 6}).edges()));
}

TEST_CASE("rerooting at every brrb-path keeps the step count") {
	std::vector<BuildingSequence> seqs{
	    {{0, 1, 2, 3}, {}},
	    {{0, 1, 2, 3}, {{{4, 5, 6, 3, 7, 8, 9}}}},
	    {{0, 1, 2, 3}, {{{4, 5, 1, 6, 7}}}},
	    kTwoStep,
	    {{0, 1, 2, 3}, {{{4, 5, 1, 6, 7}}, {{8, 9, 5, 10, 11}}, {{12, 13, 14, 7, 15, 16, 17}}}},
	};
	for (const BuildingSequence& s : seqs) {
		Graph t = skeleton_graph(s);
		for (const Walk& p : brrb_paths(t)) {
			for (const Walk& q : {p, reversed(p)}) {
				BuildingSequence r = reroot_sequence(t, q);
				CHECK(r.start == q.vertices);
				CHECK(r.steps.size() == s.steps.size());
				CHECK(verify_building_sequence(t, r).ok);
			}
		}
	}
	CHECK_THROWS_AS(reroot_sequence(path_graph(3), Walk::path({0, 1, 2})), not_a_brrb_path);
	Graph t = skeleton_graph(kTwoStep);
	CHECK_THROWS_AS(reroot_sequence(t, Walk::path({4, 5, 1, 6})), not_a_brrb_path);
}

TEST_CASE("every skeleton edge lies on a brrb-path") {
	Graph t = skeleton_graph(kTwoStep);
	EdgeList covered;
	for (const Walk& p : brrb_paths(t)) covered = edge_union(covered, p.edges());
	CHECK(covered == t.edges());
}

TEST_CASE("random trees: recognition agrees with the exact oracle") {
	std::mt19937_64 rng(11);
	int members = 0, skeletons = 0;
	for (int trial = 0; trial < 3000 && members < 300; ++trial) {
		int n = 4 + static_cast<int>(rng() % 10);
		Graph t = random_tree(rng, n);
		if (!in_class_g(t)) continue;
		++members;
		auto seq = recognize_skeleton(t);
		bool infeasible = !decompose_4pc_exact(t).has_value();
		CHECK(seq.has_value() == infeasible);
		if (seq) {
			++skeletons;
			CHECK(verify_building_sequence(t, *seq).ok);
			CHECK((t.edge_count() - 3) % 2 == 0);
		}
	}
	CHECK(members > 20);
	MESSAGE("members ", members, ", skeletons ", skeletons);
}

}
