#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/enumerate.hpp"
#include "pcd/gallai.hpp"
#include "pcd/oracle.hpp"
#include "support.hpp"

using namespace pcd;
using testsupport::make;

namespace {

bool path_decomposition(const Graph& g, const Decomposition& d) {
	for (const Walk& w : d.elements)
		if (w.is_cycle()) return false;
	return validate_decomposition(g, d).ok;
}

} // namespace

TEST_SUITE("gallai") {

TEST_CASE("examples") {
	GallaiResult p4 = gallai_decomposition(path_graph(4));
	CHECK(p4.paths.elements.size() == 1);
	CHECK(p4.bound == 3);

	GallaiResult c5 = gallai_decomposition(cycle_graph(5));
	CHECK(c5.paths.elements.size() == 2);
	CHECK(c5.route == GallaiRoute::cycle_graph);
	CHECK(path_decomposition(cycle_graph(5), c5.paths));

	Graph eight = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
	GallaiResult e = gallai_decomposition(eight);
	CHECK(e.paths.elements.size() == 2);
	CHECK(e.within_bound);
	CHECK(path_decomposition(eight, e.paths));

	Graph glued = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
	GallaiResult h = gallai_decomposition(glued);
	CHECK(h.route == GallaiRoute::hs_fallback);
	CHECK(h.within_bound);
}

TEST_CASE("minimum path counts") {
	CHECK(min_path_decomposition_exact(path_graph(4)).k == 1);
	CHECK(min_path_decomposition_exact(star_graph(3)).k == 2);
	CHECK(min_path_decomposition_exact(cycle_graph(4)).k == 2);
	std::mt19937_64 rng(5);
	for (int i = 0; i < 40; ++i) {
		Graph g = testsupport::random_graph(rng, 6, 0.4);
		if (g.edge_count() == 0 || g.edge_count() > 9) continue;
		MinPathResult r = min_path_decomposition_exact(g);
		CHECK(r.k == testsupport::brute_force_min_paths(g));
		CHECK(path_decomposition(g, r.paths));
	}
}

TEST_CASE("enumerated members within the edge bound") {
	for (const Graph& g : enumerate_class_g(8)) {
		int bound = (g.vertex_count() + 1) / 2;
		if (g.edge_count() > 4 * bound) continue;
		GallaiResult r = gallai_decomposition(g);
		CHECK(r.within_bound);
		CHECK(static_cast<int>(r.paths.elements.size()) <= bound);
		CHECK(path_decomposition(g, r.paths));
	}
}

TEST_CASE("errors") {
	CHECK_THROWS_AS(gallai_decomposition(make(3, {{0, 1}, {1, 2}, {2, 0}})), not_in_class_g);
	CHECK_THROWS_AS(gallai_decomposition(complete_bipartite(6, 6)), edge_bound_violated);
}

}
