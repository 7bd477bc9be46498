#include "cli.hpp"

#include "pcd/decomposer.hpp"
#include "pcd/enumerate.hpp"
#include "pcd/errors.hpp"
#include "pcd/gallai.hpp"
#include "pcd/harness.hpp"
#include "pcd/io.hpp"
#include "pcd/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pcd {

namespace {

struct Globals {
	std::string format = "edge-list";
	bool json = false;
	bool dot = false;
	std::uint64_t seed = 1;
	int nmax = 8;
};

std::string read_all(const std::string& path, std::istream& in) {
	if (path == "-") {
		std::stringstream ss;
		ss << in.rdbuf();
		return ss.str();
	}
	std::ifstream f(path);
	if (!f) throw parse_error("cannot open '" + path + "'");
	std::stringstream ss;
	ss << f.rdbuf();
	return ss.str();
}

Graph read_graph(const Globals& g, const std::string& path, std::istream& in) {
	std::string text = read_all(path, in);
	if (g.format == "edge-list") return parse_edge_list(text);
	std::istringstream lines(text);
	std::vector<Graph> gs = read_graph6_stream(lines);
	if (gs.size() != 1) throw parse_error("expected exactly one graph6 line, got " + std::to_string(gs.size()));
	return gs.front();
}

std::vector<Graph> read_graphs(const Globals& g, const std::string& path, std::istream& in) {
	std::string text = read_all(path, in);
	if (g.format == "edge-list") return {parse_edge_list(text)};
	std::istringstream lines(text);
	return read_graph6_stream(lines);
}

json parse_json_text(const std::string& text) {
	try {
		return json::parse(text);
	} catch (const json::exception& e) {
		throw parse_error(std::string("JSON: ") + e.what());
	}
}

void print_walk(std::ostream& out, const Walk& w) {
	out << (w.is_cycle() ? "cycle" : "path ");
	for (Vertex v : w.vertices) out << ' ' << v;
	out << '\n';
}

json verdict_json(const Verdict& v) { return json{{"ok", v.ok}, {"reasons", v.reasons}}; }

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
	err << json{{"schema_version", kSchemaVersion}, {"type", "error"}, {"kind", kind}, {"message", message}}.dump() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
	CLI::App app{"path/cycle decompositions of length >= 4 and hanging-square certificates", "pcd"};
	app.fallthrough();
	app.require_subcommand(1);
	Globals g;
	app.add_option("--format", g.format, "graph input format")->check(CLI::IsMember({"edge-list", "graph6"}));
	app.add_flag("--json", g.json, "print a versioned JSON document");
	app.add_flag("--dot", g.dot, "print Graphviz DOT");
	app.add_option("--seed", g.seed, "random seed");
	app.add_option("--nmax", g.nmax, "vertex bound for enumerate")->check(CLI::Range(1, kEnumerateVertexLimit));

	std::string input = "-";
	auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "graph file, '-' for stdin"); };

	auto* classify = app.add_subcommand("classify", "class membership report");
	add_input(classify);
	auto* decompose = app.add_subcommand("decompose", "4-pc decomposition or hanging-square certificate");
	add_input(decompose);
	auto* skeleton = app.add_subcommand("skeleton", "building sequence of a skeleton tree");
	add_input(skeleton);
	auto* verify = app.add_subcommand("verify-cert", "check a JSON certificate against a graph (exit 0 valid, 1 invalid)");
	std::string cert_path;
	verify->add_option("--cert", cert_path, "certificate JSON file")->required();
	add_input(verify);
	auto* gallai = app.add_subcommand("gallai", "path decomposition with at most ceil(n/2) paths");
	add_input(gallai);
	auto* enumerate = app.add_subcommand("enumerate", "class members up to --nmax vertices as graph6");
	auto* survey = app.add_subcommand("survey", "dichotomy survey over a graph6 stream");
	bool csv = false, timing = false, no_gallai = false;
	survey->add_flag("--csv", csv, "per-n counts as CSV");
	survey->add_flag("--timing", timing, "include per-phase timing");
	survey->add_flag("--no-gallai", no_gallai, "skip the Gallai pipeline");
	add_input(survey);
	auto* fuzz = app.add_subcommand("fuzz", "randomized merge-lemma checks");
	std::string kind_name;
	int trials = 1000, mutations = 200;
	fuzz->add_option("--kind", kind_name, "merge kind, or 'all'")->required();
	fuzz->add_option("--trials", trials, "valid instances per kind")->check(CLI::NonNegativeNumber);
	fuzz->add_option("--mutations", mutations, "mutated instances per kind")->check(CLI::NonNegativeNumber);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	} catch (const CLI::ParseError& e) {
		emit_error(err, "usage", e.what());
		return 2;
	}
	if (g.json && g.dot) {
		emit_error(err, "usage", "--json and --dot are exclusive");
		return 2;
	}

	try {
		if (classify->parsed()) {
			Graph graph = read_graph(g, input, in);
			ClassGReport r = class_g_report(graph);
			if (g.json) out << document("class_g_report", r).dump(2) << '\n';
			else if (g.dot) out << emit_dot(graph);
			else {
				out << "connected " << (r.connected ? "yes" : "no") << "\ntriangle-free " << (r.triangle_free ? "yes" : "no")
				    << "\nodd distance " << (r.odd_distance == kInfinity ? std::string("inf") : std::to_string(r.odd_distance))
				    << "\nmember " << (r.member ? "yes" : "no") << '\n';
			}
			return 0;
		}
		if (decompose->parsed()) {
			Graph graph = read_graph(g, input, in);
			DichotomyResult r = decompose_4pc(graph);
			if (g.json) out << document("dichotomy_result", r).dump(2) << '\n';
			else if (g.dot) out << (r.decomposition ? emit_dot(graph, *r.decomposition) : emit_dot(graph, *r.certificate));
			else if (r.decomposition) {
				out << "decomposable: " << r.decomposition->elements.size() << " elements (" << provenance_name(r.provenance) << ")\n";
				for (const Walk& w : r.decomposition->elements) print_walk(out, w);
			} else {
				const HangingSquareCertificate& c = *r.certificate;
				out << "hanging-square: skeleton with " << c.skeleton.steps.size() << " building paths, " << c.bunches.size() << " bunches\n";
				print_walk(out, Walk::path(c.skeleton.start));
				for (const BuildingPath& bp : c.skeleton.steps) print_walk(out, Walk::path(bp.vertices));
				for (const Bunch& b : c.bunches)
					for (const Walk& q : b.squares) print_walk(out, q);
			}
			return 0;
		}
		if (skeleton->parsed()) {
			Graph graph = read_graph(g, input, in);
			if (!is_tree(graph)) throw not_a_tree("input is not a tree");
			auto seq = recognize_skeleton(graph);
			if (!seq) {
				emit_error(err, "not_skeleton", "the tree is not a skeleton");
				return 1;
			}
			if (g.json) out << document("building_sequence", *seq).dump(2) << '\n';
			else if (g.dot) out << emit_dot(graph, parity_coloring(graph));
			else {
				out << "skeleton with " << seq->steps.size() << " building paths\n";
				print_walk(out, Walk::path(seq->start));
				for (const BuildingPath& bp : seq->steps) print_walk(out, Walk::path(bp.vertices));
			}
			return 0;
		}
		if (verify->parsed()) {
			Graph graph = read_graph(g, input, in);
			HangingSquareCertificate cert = certificate_from_document(parse_json_text(read_all(cert_path, in)));
			Verdict v = verify_hs_certificate(graph, cert);
			if (g.json) out << document("verdict", verdict_json(v)).dump(2) << '\n';
			else {
				out << (v.ok ? "valid" : "invalid") << '\n';
				for (const auto& r : v.reasons) out << "  " << r << '\n';
			}
			return v.ok ? 0 : 1;
		}
		if (gallai->parsed()) {
			Graph graph = read_graph(g, input, in);
			GallaiResult r = gallai_decomposition(graph);
			if (g.json) out << document("gallai_result", r).dump(2) << '\n';
			else if (g.dot) out << emit_dot(graph, r.paths);
			else {
				out << r.paths.elements.size() << " paths, bound " << r.bound << ", route " << gallai_route_name(r.route) << '\n';
				for (const Walk& w : r.paths.elements) print_walk(out, w);
			}
			return 0;
		}
		if (enumerate->parsed()) {
			for (const Graph& graph : enumerate_class_g(g.nmax)) out << emit_graph6(graph) << '\n';
			return 0;
		}
		if (survey->parsed()) {
			Globals sg = g;
			sg.format = "graph6";
			SurveyOptions opts;
			opts.gallai = !no_gallai;
			opts.timing = timing;
			SurveyReport r = dichotomy_survey(read_graphs(sg, input, in), opts);
			if (g.json) out << document("survey_report", r).dump(2) << '\n';
			else if (csv) {
				out << "n,members,hanging_square,decomposable\n";
				for (const SurveyCounts& c : r.per_n) out << c.n << ',' << c.members << ',' << c.hanging_square << ',' << c.decomposable << '\n';
			} else {
				out << "n\tmembers\thanging_square\tdecomposable\n";
				for (const SurveyCounts& c : r.per_n) out << c.n << '\t' << c.members << '\t' << c.hanging_square << '\t' << c.decomposable << '\n';
				out << "total\t" << r.members() << '\t' << r.hanging_square() << '\t' << r.decomposable() << '\n';
				out << "violations " << r.violations.size() << ", skipped " << r.skipped << ", fallbacks " << r.fallback_count
				    << ", merge exhausted " << r.merge_exhausted_count << ", gallai " << r.gallai_within_bound << '/' << r.gallai_checked << '\n';
				for (const SurveyViolation& v : r.violations) out << "  " << v.graph6 << ": " << v.reason << '\n';
			}
			return r.violations.empty() ? 0 : 1;
		}
		if (fuzz->parsed()) {
			std::vector<MergeKind> kinds;
			if (kind_name == "all") kinds.assign(kAllMergeKinds.begin(), kAllMergeKinds.end());
			else if (auto k = parse_merge_kind(kind_name)) kinds.push_back(*k);
			else throw parse_error("unknown merge kind '" + kind_name + "'");
			json reports = json::array();
			bool all_ok = true;
			for (MergeKind k : kinds) {
				FuzzReport r = lemma_fuzz(k, trials, g.seed, mutations);
				all_ok = all_ok && r.valid == r.trials && r.mutations_rejected == r.mutation_trials;
				if (g.json) reports.push_back(r);
				else {
					out << merge_kind_name(k) << ": " << r.valid << '/' << r.trials << " valid, " << r.mutations_rejected << '/'
					    << r.mutation_trials << " mutations rejected\n";
					for (const auto& f : r.failures) out << "  " << f << '\n';
				}
			}
			if (g.json) out << json{{"schema_version", kSchemaVersion}, {"type", "fuzz_reports"}, {"reports", reports}}.dump(2) << '\n';
			return all_ok ? 0 : 1;
		}
	} catch (const error& e) {
		emit_error(err, e.kind(), e.what());
		return 2;
	} catch (const json::exception& e) {
		emit_error(err, "parse_error", e.what());
		return 2;
	}
	return 2;
}

} // namespace pcd
