// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "cli.hpp"
#include "pcd/builders.hpp"
#include "pcd/decomposer.hpp"
#include "pcd/enumerate.hpp"
#include "pcd/gallai.hpp"
#include "pcd/harness.hpp"
#include "pcd/io.hpp"
#include "pcd/json_io.hpp"
#include "pcd/oracle.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pcd;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
	bool pass;
	std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
	std::ostringstream o;
	o.precision(2);
	o << std::fixed << s << "s";
	return o.str();
}

// recognized hanging-square graphs: enumerated members, skeleton trees and seeded random instances
std::vector<std::pair<Graph, HangingSquareCertificate>> hanging_square_pool(int max_edges) {
	std::vector<Graph> candidates;
	for (const Graph& g : enumerate_class_g(8)) candidates.push_back(g);
	for (const BuildingSequence& s : enumerate_skeletons(max_edges)) candidates.push_back(skeleton_graph(s));
	Rng rng(2024);
	for (int i = 0; i < 400; ++i) {
		HangingSquareCertificate h = random_hanging_square(rng, 3, 0, 3);
		candidates.push_back(edge_subgraph(h.edges()).graph);
	}
	std::vector<std::pair<Graph, HangingSquareCertificate>> out;
	for (const Graph& g : candidates) {
		if (g.edge_count() > max_edges || !in_class_g(g)) continue;
		if (auto c = recognize_hanging_square(g)) out.emplace_back(g, *c);
	}
	return out;
}

Outcome dichotomy() {
	auto t0 = Clock::now();
	std::vector<Graph> gs = enumerate_class_g(8);
	SurveyOptions opts;
	opts.gallai = false;
	SurveyReport r = dichotomy_survey(gs, opts);
	double s = seconds_since(t0);
	bool ok = r.violations.empty() && r.members() == r.hanging_square() + r.decomposable() && r.skipped == 0 && s <= 600;
	return {ok, std::to_string(r.members()) + " members, " + std::to_string(r.hanging_square()) + " hanging-square, " +
	                std::to_string(r.decomposable()) + " decomposable, " + std::to_string(r.violations.size()) + " violations, " + fmt_seconds(s)};
}

Outcome trees() {
	int members = 0, skeletons = 0, bad = 0;
	for (const Graph& t : enumerate_trees(14)) {
		if (!in_class_g(t)) continue;
		++members;
		try {
			TreeResult r = decompose_tree(t);
			bool feasible = decompose_4pc_exact(t).has_value();
			if (auto* d = std::get_if<Decomposition>(&r)) {
				bool paths = std::none_of(d->elements.begin(), d->elements.end(), [](const Walk& w) { return w.is_cycle(); });
				if (!feasible || !paths || !validate_decomposition(t, *d).ok) ++bad;
			} else {
				++skeletons;
				if (feasible || !verify_building_sequence(t, std::get<BuildingSequence>(r)).ok) ++bad;
			}
		} catch (const error& e) {
			++bad;
		}
	}
	return {bad == 0 && members > 0, std::to_string(members) + " trees, " + std::to_string(skeletons) + " skeletons, " + std::to_string(bad) + " failures"};
}

Outcome impossibility(const std::vector<std::pair<Graph, HangingSquareCertificate>>& pool) {
	int bad = 0;
	for (const auto& [g, cert] : pool)
		if (decompose_4pc_exact(g).has_value()) ++bad;
	return {bad == 0 && !pool.empty(), std::to_string(pool.size()) + " hanging-square graphs, " + std::to_string(bad) + " feasible"};
}

Outcome observation(const std::vector<std::pair<Graph, HangingSquareCertificate>>& pool) {
	int bad = 0;
	for (const auto& [g, cert] : pool) {
		Decomposition d = hs_canonical_decomposition(cert);
		int threes = 0;
		bool lengths = true;
		for (const Walk& w : d.elements) {
			int l = w.length();
			if (l == 3) ++threes;
			else if (l != 4 && l != 6) lengths = false;
		}
		Decomposition loose = d;
		loose.min_length = 1;
		if (threes != 1 || !lengths || !validate_decomposition(g, loose).ok) ++bad;
	}
	return {bad == 0 && !pool.empty(), std::to_string(pool.size()) + " certificates, " + std::to_string(bad) + " failures"};
}

Outcome rerooting() {
	int skeletons = 0, reroots = 0, bad = 0;
	for (const BuildingSequence& s : enumerate_skeletons(25)) {
		Graph t = skeleton_graph(s);
		auto rec = recognize_skeleton(t);
		if (!rec) {
			++bad;
			continue;
		}
		++skeletons;
		for (const Walk& p : brrb_paths(t)) {
			++reroots;
			try {
				BuildingSequence r = reroot_sequence(t, p);
				if (r.steps.size() != rec->steps.size() || !verify_building_sequence(t, r).ok || r.start != p.vertices) ++bad;
			} catch (const error&) {
				++bad;
			}
		}
	}
	return {bad == 0 && skeletons > 0, std::to_string(skeletons) + " skeletons, " + std::to_string(reroots) + " rerootings, " + std::to_string(bad) + " failures"};
}

Outcome gallai() {
	int checked = 0, bad = 0, exhausted = 0;
	for (const Graph& g : enumerate_class_g(8)) {
		int bound = (g.vertex_count() + 1) / 2;
		if (g.edge_count() > 4 * bound) continue;
		++checked;
		try {
			GallaiResult r = gallai_decomposition(g);
			bool paths = std::none_of(r.paths.elements.begin(), r.paths.elements.end(), [](const Walk& w) { return w.is_cycle(); });
			if (!paths || static_cast<int>(r.paths.elements.size()) > bound || !validate_decomposition(g, r.paths).ok) ++bad;
		} catch (const merge_exhausted&) {
			++exhausted;
		} catch (const error&) {
			++bad;
		}
	}
	return {bad == 0 && exhausted == 0 && checked > 0,
	        std::to_string(checked) + " graphs, " + std::to_string(bad) + " failures, MergeExhausted " + std::to_string(exhausted)};
}

Outcome fuzz() {
	std::string detail;
	bool ok = true;
	for (MergeKind k : kAllMergeKinds) {
		FuzzReport r = lemma_fuzz(k, 1000, 1, 200);
		bool kind_ok = r.valid == 1000 && r.mutation_trials == 200 && r.mutations_rejected == 200;
		ok = ok && kind_ok;
		if (!kind_ok)
			detail += merge_kind_name(k) + " " + std::to_string(r.valid) + "/1000 valid " + std::to_string(r.mutations_rejected) + "/" +
			          std::to_string(r.mutation_trials) + " rejected; ";
	}
	if (ok) detail = "9 kinds, 1000/1000 valid and 200/200 mutations rejected each";
	return {ok, detail};
}

// strips the document header and compares against a fresh serialization of the parsed value
template <class T>
bool reparses(const json& doc) {
	json body = doc;
	body.erase("schema_version");
	body.erase("type");
	T value = body.get<T>();
	return json(value) == body;
}

struct CliRun {
	int code;
	json doc;
};

CliRun cli(std::vector<std::string> args, const std::string& input) {
	std::istringstream in(input);
	std::ostringstream out, err;
	int code = run_cli(args, in, out, err);
	json doc;
	if (code == 0 && !out.str().empty()) doc = json::parse(out.str());
	return {code, doc};
}

Outcome format_fidelity() {
	int round_trips = 0, bad = 0;
	std::vector<Graph> all;
	for (int n = 1; n <= 8; ++n)
		for (const Graph& g : enumerate_connected_triangle_free(n)) all.push_back(g);
	for (const Graph& g : enumerate_trees(12)) all.push_back(g);
	for (const Graph& g : all) {
		++round_trips;
		if (!(parse_graph6(emit_graph6(g)) == g)) ++bad;
	}

	int corpus = 0;
	std::ifstream in(PCD_TEST_DATA "/reference_graph6.txt");
	std::string line;
	while (std::getline(in, line)) {
		std::istringstream row(line);
		std::string code, edges, tok;
		int n = 0;
		std::getline(row, code, '\t');
		row >> n;
		row.ignore();
		std::getline(row, edges);
		EdgeList list;
		std::istringstream es(edges);
		while (es >> tok) {
			auto dash = tok.find('-');
			list.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
		}
		Graph expected(n, list);
		++corpus;
		if (!(parse_graph6(code) == expected) || emit_graph6(expected) != code) ++bad;
	}

	int docs = 0;
	auto check_doc = [&](bool ok) {
		++docs;
		if (!ok) ++bad;
	};
	std::vector<Graph> members = enumerate_class_g(8);
	for (const Graph& g : members) {
		std::string text = emit_edge_list(g);
		CliRun c = cli({"classify", "--json"}, text);
		check_doc(c.code == 0 && reparses<ClassGReport>(c.doc));
		CliRun d = cli({"decompose", "--json"}, text);
		check_doc(d.code == 0 && reparses<DichotomyResult>(d.doc));
		if (g.edge_count() <= 4 * ((g.vertex_count() + 1) / 2)) {
			CliRun ga = cli({"gallai", "--json"}, text);
			check_doc(ga.code == 0 && reparses<GallaiResult>(ga.doc));
		}
		if (is_tree(g)) {
			CliRun s = cli({"skeleton", "--json"}, text);
			if (s.code == 0) check_doc(reparses<BuildingSequence>(s.doc));
		}
	}
	std::string stream;
	for (const Graph& g : members) stream += emit_graph6(g) + "\n";
	CliRun sv = cli({"survey", "--json"}, stream);
	check_doc(sv.code == 0 && reparses<SurveyReport>(sv.doc));
	CliRun fz = cli({"fuzz", "--kind", "all", "--trials", "5", "--mutations", "5", "--json"}, "");
	check_doc(fz.code == 0);
	if (fz.code == 0)
		for (const json& r : fz.doc.at("reports")) check_doc(json(r.get<FuzzReport>()) == r);

	return {bad == 0 && corpus >= 50, std::to_string(round_trips) + " graph6 round trips, " + std::to_string(corpus) + " reference graphs, " +
	                                      std::to_string(docs) + " CLI documents, " + std::to_string(bad) + " failures"};
}

} // namespace

int main() {
	bool all = true;
	auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
		auto t0 = Clock::now();
		Outcome o;
		try {
			o = fn();
		} catch (const std::exception& e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		all = all && o.pass;
		std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << " [" << fmt_seconds(seconds_since(t0))
		          << "]" << std::endl;
	};
	std::vector<std::pair<Graph, HangingSquareCertificate>> pool20, pool;
	report(1, "dichotomy n<=8", dichotomy);
	report(2, "trees <=14 edges", trees);
	report(3, "hanging-square graphs infeasible", [&] {
		pool20 = hanging_square_pool(20);
		return impossibility(pool20);
	});
	report(4, "canonical decomposition lengths", [&] {
		pool = hanging_square_pool(40);
		return observation(pool);
	});
	report(5, "rerooting at every brrb-path", rerooting);
	report(6, "gallai bound n<=8", gallai);
	report(7, "merge lemma fuzz", fuzz);
	report(8, "format fidelity", format_fidelity);
	return all ? 0 : 1;
}
