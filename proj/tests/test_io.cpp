#include "doctest.h"
#include "pcd/builders.hpp"
#include "pcd/enumerate.hpp"
#include "pcd/io.hpp"
#include "support.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using namespace pcd;
using testsupport::make;

namespace {

int count_matches(const std::string& text, const std::regex& re) {
	return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("edge lists") {
	Graph p = parse_edge_list("0 1\n1 2\n");
	CHECK(p.vertex_count() == 3);
	CHECK(p.edge_count() == 2);
	Graph relabeled = parse_edge_list("# comment\n10 7   # trailing\n\n7 3\n");
	CHECK(relabeled.edges() == EdgeList{Edge(0, 1), Edge(1, 2)});
	CHECK_THROWS_AS(parse_edge_list("0 0\n"), self_loop);
	CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), duplicate_edge);
	CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), duplicate_edge);
	try {
		parse_edge_list("0 1\n1 x\n");
		FAIL("no throw");
	} catch (const parse_error& e) {
		CHECK(std::string(e.what()).find("line 2") != std::string::npos);
	}
	CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), parse_error);
	Graph p5 = path_graph(5);
	CHECK(parse_edge_list(emit_edge_list(p5)).edges() == p5.edges());
}

TEST_CASE("graph6") {
	Graph k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
	CHECK(emit_graph6(k4) == "C~");
	CHECK(parse_graph6("C~").edges() == k4.edges());
	CHECK(emit_graph6(cycle_graph(4)) == "Cl");
	CHECK(parse_graph6(">>graph6<<C~").edge_count() == 6);
	CHECK_THROWS_AS(parse_graph6("C"), parse_error);
	CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);
	CHECK_THROWS_AS(parse_graph6("B~"), parse_error); // nonzero padding bits
	CHECK_THROWS_AS(parse_graph6("~?@?"), parse_error);
	CHECK_THROWS_AS(emit_graph6(path_graph(62)), too_large);

	for (const Graph& g : enumerate_class_g(8)) CHECK(parse_graph6(emit_graph6(g)).edges() == g.edges());

	std::istringstream stream(">>graph6<<C~\n\nCr\n");
	CHECK(read_graph6_stream(stream).size() == 2);
}

TEST_CASE("reference corpus") {
	std::ifstream in(PCD_TEST_DATA "/reference_graph6.txt");
	REQUIRE(in);
	std::string line;
	int rows = 0;
	while (std::getline(in, line)) {
		std::istringstream row(line);
		std::string code, edges;
		int n = 0;
		std::getline(row, code, '\t');
		row >> n;
		row.ignore();
		std::getline(row, edges);
		EdgeList list;
		std::istringstream es(edges);
		std::string tok;
		while (es >> tok) {
			auto dash = tok.find('-');
			list.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
		}
		Graph expected(n, list);
		CAPTURE(code);
		Graph parsed = parse_graph6(code);
		CHECK(parsed.vertex_count() == n);
		CHECK(parsed.edges() == expected.edges());
		CHECK(emit_graph6(expected) == code);
		++rows;
	}
	CHECK(rows >= 50);
}

TEST_CASE("dot") {
	std::string plain = emit_dot(cycle_graph(4));
	CHECK(count_matches(plain, std::regex(R"(^  \d+;$)", std::regex::multiline)) == 4);
	CHECK(count_matches(plain, std::regex(" -- ")) == 4);

	Graph p3 = path_graph(3);
	std::string colored = emit_dot(p3, parity_coloring(p3));
	CHECK(count_matches(colored, std::regex("fillcolor=black")) == 2);
	CHECK(count_matches(colored, std::regex("fillcolor=red")) == 2);

	Graph eight = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
	Decomposition d{{Walk::path({1, 0, 4, 5, 6}), Walk::path({6, 0, 3, 2, 1})}, 4};
	std::string over = emit_dot(eight, d);
	std::smatch m;
	std::set<std::string> colors;
	std::regex color_re("-- \\d+ \\[color=([a-z0-9]+)");
	for (auto it = std::sregex_iterator(over.begin(), over.end(), color_re); it != std::sregex_iterator(); ++it) colors.insert((*it)[1]);
	CHECK(colors.size() == d.elements.size());
}

}
