#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/oracle.hpp"
#include "support.hpp"

using namespace pcd;
using testsupport::make;

namespace {

// 3-path 0-1-2-3 with the square 3-4-5-6 hanging at the end vertex 3
Graph glued() { return make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}}); }

// brrb-path 0-1-2-3 with vertices 4 and 5 both adjacent to 0 and 2
Graph two_bunch() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}, {0, 5}, {5, 2}}); }

} // namespace

TEST_SUITE("hanging_square") {

TEST_CASE("good squares") {
	CHECK(find_good_squares(cycle_graph(4)).empty());
	CHECK(find_good_squares(glued()) == std::vector<Walk>{Walk::cycle({3, 4, 5, 6})});
	std::vector<Walk> two = find_good_squares(two_bunch());
	CHECK(std::find(two.begin(), two.end(), Walk::cycle({0, 4, 2, 5})) != two.end());
	// the squares through x1 also have two vertices of degree 2
	CHECK(two.size() == 3);
}

TEST_CASE("maximal bunches") {
	std::vector<Bunch> k23 = find_maximal_bunches(complete_bipartite(2, 3));
	REQUIRE(k23.size() == 1);
	CHECK(k23[0].k() == 1);
	CHECK(std::make_pair(k23[0].a, k23[0].b) == std::make_pair(0, 1));
	std::vector<Bunch> one = find_maximal_bunches(glued());
	REQUIRE(one.size() == 1);
	CHECK(one[0].k() == 1);
	CHECK(one[0].identified_joints == std::vector<Vertex>{3});
	Graph twice = make(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 0}, {3, 7}, {7, 8}, {8, 9}, {9, 3}});
	CHECK(find_maximal_bunches(twice).size() == 2);
}

TEST_CASE("recognition examples") {
	Graph g = glued();
	auto cert = recognize_hanging_square(g);
	REQUIRE(cert);
	CHECK(cert->skeleton.steps.empty());
	REQUIRE(cert->bunches.size() == 1);
	CHECK(cert->bunches[0].identified_joints == std::vector<Vertex>{3});
	CHECK(verify_hs_certificate(g, *cert).ok);

	Graph h = two_bunch();
	auto c2 = recognize_hanging_square(h);
	REQUIRE(c2);
	REQUIRE(c2->occupations.size() == 1);
	CHECK(c2->bunches[0].identified_joints == std::vector<Vertex>{0, 2});
	CHECK(verify_hs_certificate(h, *c2).ok);

	CHECK_FALSE(recognize_hanging_square(cycle_graph(4)));
	CHECK_THROWS_AS(recognize_hanging_square(path_graph(2)), not_in_class_g);
}

TEST_CASE("certificate tampering is detected") {
	Graph g = glued();
	HangingSquareCertificate cert = *recognize_hanging_square(g);
	HangingSquareCertificate wrong = cert;
	wrong.bunches[0].squares[0] = Walk::cycle({4, 5, 6, 3});
	std::swap(wrong.bunches[0].a, wrong.bunches[0].b);
	wrong.bunches[0].a = 4;
	wrong.bunches[0].b = 6;
	CHECK_FALSE(verify_hs_certificate(g, wrong).ok);
	HangingSquareCertificate missing = cert;
	missing.bunches.clear();
	CHECK_FALSE(verify_hs_certificate(g, missing).ok);
	HangingSquareCertificate p4{{{0, 1, 2, 3}, {}}, {}, {}};
	CHECK_FALSE(verify_hs_certificate(path_graph(4), p4).ok);

	Graph h = two_bunch();
	HangingSquareCertificate c2 = *recognize_hanging_square(h);
	HangingSquareCertificate no_record = c2;
	no_record.occupations.clear();
	CHECK_FALSE(verify_hs_certificate(h, no_record).ok);
	HangingSquareCertificate bad_at = c2;
	bad_at.occupations[0].at = bad_at.occupations[0].at == OccupiedAt::x0_x2 ? OccupiedAt::x1_x3 : OccupiedAt::x0_x2;
	CHECK_FALSE(verify_hs_certificate(h, bad_at).ok);
}

TEST_CASE("occupied path degree conditions") {
	// a 4-path hung at x1 makes d(x1) = 4, which an occupied path forbids
	Graph h = make(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}, {0, 5}, {5, 2}, {6, 7}, {7, 1}, {1, 8}, {8, 9}});
	if (in_class_g(h)) {
		auto cert = recognize_hanging_square(h);
		CHECK(cert.has_value() == !decompose_4pc_exact(h).has_value());
	}
}

TEST_CASE("canonical decomposition") {
	Graph g = glued();
	Decomposition d = hs_canonical_decomposition(*recognize_hanging_square(g));
	CHECK(d.min_length == 3);
	CHECK(validate_decomposition(g, d).ok);
	REQUIRE(d.elements.size() == 2);
	CHECK(d.elements[0].length() == 3);
	CHECK(d.elements[1].is_cycle());
	Decomposition p3 = hs_canonical_decomposition({{{0, 1, 2, 3}, {}}, {}, {}});
	CHECK(p3.elements.size() == 1);
	Graph h = two_bunch();
	CHECK(validate_decomposition(h, hs_canonical_decomposition(*recognize_hanging_square(h))).ok);
	HangingSquareCertificate broken{{{0, 1, 2}, {}}, {}, {}};
	CHECK_THROWS_AS(hs_canonical_decomposition(broken), unverified_certificate);
}

TEST_CASE("random class members: recognition is the complement of feasibility") {
	std::mt19937_64 rng(17);
	int members = 0, hs = 0;
	for (int trial = 0; trial < 60000 && members < 400; ++trial) {
		int n = 4 + static_cast<int>(rng() % 6);
		Graph g = testsupport::random_graph(rng, n, 0.3);
		if (g.edge_count() > 14 || !in_class_g(g)) continue;
		++members;
		auto cert = recognize_hanging_square(g);
		bool feasible = decompose_4pc_exact(g).has_value();
		CHECK(cert.has_value() != feasible);
		if (cert) {
			++hs;
			CHECK(verify_hs_certificate(g, *cert).ok);
		}
	}
	MESSAGE("members ", members, ", hanging-square ", hs);
}

}
