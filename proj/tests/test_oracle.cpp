#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/oracle.hpp"
#include "support.hpp"

using namespace pcd;
using testsupport::make;

TEST_SUITE("oracle") {

TEST_CASE("4-pc oracle examples") {
	auto c4 = decompose_4pc_exact(cycle_graph(4));
	REQUIRE(c4);
	CHECK(c4->elements.size() == 1);
	CHECK(c4->elements[0].is_cycle());
	CHECK_FALSE(decompose_4pc_exact(path_graph(3)));
	Graph glued = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
	CHECK_FALSE(decompose_4pc_exact(glued));
	CHECK_FALSE(testsupport::brute_force_4pc(glued));
	auto p7 = decompose_4pc_exact(path_graph(7));
	REQUIRE(p7);
	CHECK(validate_decomposition(path_graph(7), *p7).ok);
}

TEST_CASE("4-pc oracle agrees with set-partition brute force") {
	std::mt19937_64 rng(3);
	int feasible = 0, checked = 0;
	for (int trial = 0; trial < 400; ++trial) {
		int n = 4 + static_cast<int>(rng() % 4);
		Graph g = testsupport::random_graph(rng, n, 0.45);
		if (g.edge_count() > 9) continue;
		++checked;
		auto d = decompose_4pc_exact(g);
		auto memo = decompose_4pc_exact(g, {true});
		bool brute = testsupport::brute_force_4pc(g);
		CHECK(d.has_value() == brute);
		CHECK(memo.has_value() == brute);
		if (d) {
			++feasible;
			CHECK(validate_decomposition(g, *d).ok);
		}
	}
	CHECK(checked > 100);
	CHECK(feasible > 0);
}

TEST_CASE("oracle is deterministic") {
	Graph g = complete_bipartite(3, 4);
	auto a = decompose_4pc_exact(g);
	auto b = decompose_4pc_exact(g);
	REQUIRE(a);
	CHECK(*a == *b);
}

TEST_CASE("oracle edge bound") {
	CHECK_THROWS_AS(decompose_4pc_exact(path_graph(65)), too_large);
	CHECK_THROWS_AS(min_path_decomposition_exact(path_graph(21)), too_large);
}

TEST_CASE("minimum path decomposition") {
	CHECK(min_path_decomposition_exact(path_graph(4)).k == 1);
	CHECK(min_path_decomposition_exact(star_graph(3)).k == 2);
	CHECK(min_path_decomposition_exact(cycle_graph(4)).k == 2);
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 200; ++trial) {
		int n = 3 + static_cast<int>(rng() % 5);
		Graph g = testsupport::random_graph(rng, n, 0.5);
		if (g.edge_count() > 8) continue;
		MinPathResult r = min_path_decomposition_exact(g);
		CHECK(r.k == testsupport::brute_force_min_paths(g));
		CHECK(r.k == static_cast<int>(r.paths.elements.size()));
		CHECK(r.k >= path_count_lower_bound(g));
		CHECK(validate_decomposition(g, r.paths).ok);
		for (const Walk& w : r.paths.elements) CHECK_FALSE(w.is_cycle());
	}
}

}
