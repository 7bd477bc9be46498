#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/json_io.hpp"
#include "support.hpp"

using namespace pcd;
using testsupport::make;

namespace {

template <class T>
T round_trip(const T& value) {
	json j = value;
	return json::parse(j.dump()).get<T>();
}

} // namespace

TEST_SUITE("json") {

TEST_CASE("round trips") {
	Graph two_bunch = make(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}, {0, 5}, {5, 2}});
	DichotomyResult hs = decompose_4pc(two_bunch);
	REQUIRE(hs.certificate);
	CHECK(round_trip(*hs.certificate) == *hs.certificate);
	DichotomyResult back = round_trip(hs);
	CHECK(back.certificate == hs.certificate);
	CHECK(back.trace == hs.trace);

	DichotomyResult c5 = decompose_4pc(cycle_graph(5));
	CHECK(round_trip(c5).decomposition == c5.decomposition);

	ClassGReport r = class_g_report(cycle_graph(6));
	ClassGReport r2 = round_trip(r);
	CHECK(r2.odd_distance == kInfinity);
	CHECK(r2.member == r.member);

	GallaiResult g = gallai_decomposition(cycle_graph(5));
	GallaiResult g2 = round_trip(g);
	CHECK(g2.paths == g.paths);
	CHECK(g2.route == g.route);
	CHECK(g2.bound == g.bound);

	SurveyReport s = dichotomy_survey({path_graph(3), cycle_graph(4), make(3, {{0, 1}, {1, 2}, {2, 0}})});
	CHECK(round_trip(s) == s);

	FuzzReport f = lemma_fuzz(MergeKind::two_cycles, 5, 1, 2);
	CHECK(round_trip(f) == f);
}

TEST_CASE("documents") {
	json d = document("class_g_report", class_g_report(cycle_graph(4)));
	CHECK(d.at("schema_version") == kSchemaVersion);
	CHECK(d.at("type") == "class_g_report");
	CHECK(d.at("member") == true);
	CHECK(d.begin().key() == "schema_version");
}

TEST_CASE("malformed input") {
	json both = json::parse(R"({"provenance": "constructive", "trace": []})");
	CHECK_THROWS_AS(both.get<DichotomyResult>(), parse_error);
	json bad_walk = json::parse(R"({"kind": "loop", "vertices": [0, 1]})");
	CHECK_THROWS_AS(bad_walk.get<Walk>(), parse_error);
	CHECK_THROWS_AS(certificate_from_document(json::parse(R"({"skeleton": 3})")), parse_error);
}

}
