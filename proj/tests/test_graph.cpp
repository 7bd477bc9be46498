#include "doctest.h"
#include "pcd/builders.hpp"
#include "support.hpp"

#include <numeric>

using namespace pcd;
using testsupport::make;

TEST_SUITE("graph") {

TEST_CASE("construction rejects loops, duplicates and out-of-range ends") {
	CHECK_THROWS_AS(make(3, {{0, 0}}), self_loop);
	CHECK_THROWS_AS(make(3, {{0, 1}, {1, 0}}), duplicate_edge);
	CHECK_THROWS_AS(make(2, {{0, 2}}), invalid_graph);
	Graph g = make(4, {{2, 1}, {0, 1}});
	CHECK(g.edge_count() == 2);
	CHECK(g.edges().front() == Edge(0, 1));
	CHECK(g.edge_id(2, 1) == 1);
	CHECK(g.edge_id(0, 3) == -1);
}

TEST_CASE("triangle freeness") {
	CHECK_FALSE(is_triangle_free(cycle_graph(3)));
	CHECK(is_triangle_free(cycle_graph(4)));
	Graph pet = petersen_graph();
	bool any = false;
	for (int a = 0; a < 10; ++a)
		for (int b = a + 1; b < 10; ++b)
			for (int c = b + 1; c < 10; ++c)
				any |= pet.has_edge(a, b) && pet.has_edge(b, c) && pet.has_edge(a, c);
	CHECK_FALSE(any);
	CHECK(is_triangle_free(pet) == !any);
}

TEST_CASE("odd distance") {
	CHECK(odd_distance(path_graph(3)) == 3);
	CHECK(odd_distance(cycle_graph(4)) == kInfinity);
	CHECK(odd_distance(star_graph(3)) == 1);
	// two disjoint edges: odd pairs inside components at distance 1
	CHECK(odd_distance(make(4, {{0, 1}, {2, 3}})) == 1);
}

TEST_CASE("class membership report") {
	CHECK(class_g_report(path_graph(3)).member);
	ClassGReport two = class_g_report(path_graph(2));
	CHECK_FALSE(two.member);
	CHECK(two.odd_distance == 2);
	CHECK(class_g_report(cycle_graph(5)).member);
	CHECK_FALSE(class_g_report(Graph(1)).member);
	CHECK_FALSE(class_g_report(cycle_graph(3)).member);
	CHECK_FALSE(class_g_report(make(3, {{0, 1}})).connected);
}

TEST_CASE("parity colouring") {
	ParityColoring c = parity_coloring(path_graph(3));
	CHECK(c.is_black(0));
	CHECK_FALSE(c.is_black(1));
	CHECK_FALSE(c.is_black(2));
	CHECK(c.is_black(3));
	ParityColoring e = parity_coloring(path_graph(1));
	CHECK((e.is_black(0) && e.is_black(1)));
	ParityColoring s = parity_coloring(star_graph(3));
	for (int v = 0; v < 4; ++v) CHECK(s.is_black(v));
	CHECK_THROWS_AS(parity_coloring(cycle_graph(4)), not_a_tree);
	CHECK_THROWS_AS(parity_coloring(make(4, {{0, 1}, {2, 3}})), not_a_tree);
}

TEST_CASE("brrb paths agree with brute force over all 3-paths") {
	CHECK(brrb_paths(path_graph(3)) == std::vector<Walk>{Walk::path({0, 1, 2, 3})});
	CHECK(brrb_paths(path_graph(4)).empty());
	// start 0-1-2-3 with a 4-path 4-5-1-6-7 hanging at vertex 1
	Graph t = make(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 1}, {1, 6}, {6, 7}});
	std::vector<std::vector<Vertex>> expected;
	for (auto& p : testsupport::all_three_paths(t)) {
		auto odd = [&](int v) { return t.degree(v) % 2 == 1; };
		if (odd(p[0]) && !odd(p[1]) && !odd(p[2]) && odd(p[3])) expected.push_back(p);
	}
	std::vector<std::vector<Vertex>> got;
	for (const Walk& w : brrb_paths(t)) got.push_back(w.vertices);
	CHECK(got == expected);
	CHECK(got.size() == 3);
	for (const Walk& w : brrb_paths(t)) CHECK(is_brrb_path(t, w));
}

TEST_CASE("decomposition validation") {
	Graph c4 = cycle_graph(4);
	CHECK(validate_decomposition(c4, {{Walk::cycle({0, 1, 2, 3})}, 4}).ok);
	CHECK(validate_decomposition(path_graph(4), {{Walk::path({0, 1, 2, 3, 4})}, 4}).ok);
	Graph p3 = path_graph(3);
	CHECK_FALSE(validate_decomposition(p3, {{Walk::path({0, 1, 2, 3})}, 4}).ok);
	CHECK_FALSE(validate_decomposition(p3, {{}, 4}).ok);
	Verdict twice = validate_decomposition(c4, {{Walk::path({0, 1, 2, 3}), Walk::path({2, 3})}, 1});
	CHECK_FALSE(twice.ok);
	CHECK_FALSE(validate_decomposition(c4, {{Walk::path({0, 2})}, 1}).ok);
}

TEST_CASE("subpaths") {
	Walk p = Walk::path({0, 1, 2, 3, 4});
	CHECK(subpath(p, 1, 3).vertices == std::vector<Vertex>{1, 2, 3});
	CHECK(subpath(p, 3, 1).vertices == std::vector<Vertex>{3, 2, 1});
	Walk c = Walk::cycle({0, 1, 2, 3});
	CHECK(subpath(c, 0, 2).vertices == std::vector<Vertex>{0, 1, 2});
	CHECK(subpath(c, 0, 1, ArcSide::longest).vertices == std::vector<Vertex>{0, 3, 2, 1});
	CHECK(subpath(c, 0, 3, ArcSide::first).vertices == std::vector<Vertex>{0, 1, 2, 3});
	CHECK(subpath(Walk::path({0, 1, 2}), 0, 0).length() == 0);
	CHECK_THROWS_AS(subpath(p, 0, 9), vertex_not_on_walk);
}

TEST_CASE("degree sum and relabelling invariance") {
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 200; ++trial) {
		Graph g = testsupport::random_graph(rng, 8, 0.35);
		int sum = 0;
		for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
		CHECK(sum == 2 * g.edge_count());
		std::vector<int> perm(8);
		std::iota(perm.begin(), perm.end(), 0);
		std::shuffle(perm.begin(), perm.end(), rng);
		Graph h = testsupport::permuted(g, perm);
		CHECK(odd_distance(h) == odd_distance(g));
		CHECK(class_g_report(h) == class_g_report(g));
	}
}

TEST_CASE("edge set helpers") {
	EdgeList a{{0, 1}, {1, 2}}, b{{2, 1}, {3, 4}};
	CHECK(edge_union(a, b).size() == 3);
	CHECK(edge_difference(a, b) == EdgeList{{0, 1}});
	CHECK_FALSE(edges_disjoint(a, b));
	CHECK(edge_components(edge_union(a, b)).size() == 2);
	Subgraph s = edge_subgraph({{5, 9}, {9, 7}});
	CHECK(s.graph.vertex_count() == 3);
	CHECK(s.lift(Walk::path({0, 2, 1})).vertices == std::vector<Vertex>{5, 9, 7});
}

}
