#include "pcd/json_io.hpp"

namespace pcd {

void to_json(json& j, const Walk& w) {
	j = json{{"kind", w.is_cycle() ? "cycle" : "path"}, {"vertices", w.vertices}};
}

void from_json(const json& j, Walk& w) {
	std::string kind = j.at("kind").get<std::string>();
	if (kind != "path" && kind != "cycle") throw parse_error("walk kind must be 'path' or 'cycle'");
	w.kind = kind == "cycle" ? WalkKind::cycle : WalkKind::path;
	w.vertices = j.at("vertices").get<std::vector<Vertex>>();
}

void to_json(json& j, const Decomposition& d) { j = json{{"min_length", d.min_length}, {"elements", d.elements}}; }

void from_json(const json& j, Decomposition& d) {
	d.min_length = j.at("min_length").get<int>();
	d.elements = j.at("elements").get<std::vector<Walk>>();
}

void to_json(json& j, const BuildingSequence& s) {
	json steps = json::array();
	for (const BuildingPath& bp : s.steps) steps.push_back(bp.vertices);
	j = json{{"start", s.start}, {"steps", steps}};
}

void from_json(const json& j, BuildingSequence& s) {
	s.start = j.at("start").get<std::vector<Vertex>>();
	s.steps.clear();
	for (const json& step : j.at("steps")) s.steps.push_back(BuildingPath{step.get<std::vector<Vertex>>()});
}

void to_json(json& j, const Bunch& b) {
	json squares = json::array();
	for (const Walk& q : b.squares) squares.push_back(q.vertices);
	j = json{{"a", b.a}, {"b", b.b}, {"squares", squares}, {"identified_joints", b.identified_joints}};
}

void from_json(const json& j, Bunch& b) {
	b.a = j.at("a").get<Vertex>();
	b.b = j.at("b").get<Vertex>();
	b.squares.clear();
	for (const json& q : j.at("squares")) b.squares.push_back(Walk::cycle(q.get<std::vector<Vertex>>()));
	b.identified_joints = j.at("identified_joints").get<std::vector<Vertex>>();
}

void to_json(json& j, const OccupationRecord& o) {
	j = json{{"path", o.path.vertices}, {"at", o.at == OccupiedAt::x0_x2 ? "x0x2" : "x1x3"}, {"bunch", o.bunch}};
}

void from_json(const json& j, OccupationRecord& o) {
	o.path = Walk::path(j.at("path").get<std::vector<Vertex>>());
	std::string at = j.at("at").get<std::string>();
	if (at != "x0x2" && at != "x1x3") throw parse_error("occupation 'at' must be 'x0x2' or 'x1x3'");
	o.at = at == "x0x2" ? OccupiedAt::x0_x2 : OccupiedAt::x1_x3;
	o.bunch = j.at("bunch").get<int>();
}

void to_json(json& j, const HangingSquareCertificate& c) {
	j = json{{"skeleton", c.skeleton}, {"bunches", c.bunches}, {"occupations", c.occupations}};
}

void from_json(const json& j, HangingSquareCertificate& c) {
	c.skeleton = j.at("skeleton").get<BuildingSequence>();
	c.bunches = j.at("bunches").get<std::vector<Bunch>>();
	c.occupations = j.at("occupations").get<std::vector<OccupationRecord>>();
}

void to_json(json& j, const ClassGReport& r) {
	j = json{{"connected", r.connected},
	         {"triangle_free", r.triangle_free},
	         {"odd_distance", r.odd_distance == kInfinity ? json(nullptr) : json(r.odd_distance)},
	         {"member", r.member}};
}

void from_json(const json& j, ClassGReport& r) {
	r.connected = j.at("connected").get<bool>();
	r.triangle_free = j.at("triangle_free").get<bool>();
	r.odd_distance = j.at("odd_distance").is_null() ? kInfinity : j.at("odd_distance").get<int>();
	r.member = j.at("member").get<bool>();
}

void to_json(json& j, const DichotomyResult& r) {
	j = json{{"provenance", provenance_name(r.provenance)}, {"trace", r.trace}};
	if (r.decomposition) j["decomposition"] = *r.decomposition;
	if (r.certificate) j["certificate"] = *r.certificate;
}

void from_json(const json& j, DichotomyResult& r) {
	std::string p = j.at("provenance").get<std::string>();
	if (p != "constructive" && p != "oracle-fallback") throw parse_error("unknown provenance '" + p + "'");
	r.provenance = p == "constructive" ? Provenance::constructive : Provenance::oracle_fallback;
	r.trace = j.value("trace", std::vector<std::string>{});
	r.decomposition.reset();
	r.certificate.reset();
	if (j.contains("decomposition")) r.decomposition = j.at("decomposition").get<Decomposition>();
	if (j.contains("certificate")) r.certificate = j.at("certificate").get<HangingSquareCertificate>();
	if (r.decomposition.has_value() == r.certificate.has_value())
		throw parse_error("a dichotomy result carries exactly one of decomposition / certificate");
}

void to_json(json& j, const GallaiResult& r) {
	j = json{{"paths", r.paths},
	         {"bound", r.bound},
	         {"within_bound", r.within_bound},
	         {"route", gallai_route_name(r.route)},
	         {"merges", r.merges}};
}

void from_json(const json& j, GallaiResult& r) {
	r.paths = j.at("paths").get<Decomposition>();
	r.bound = j.at("bound").get<int>();
	r.within_bound = j.at("within_bound").get<bool>();
	std::string route = j.at("route").get<std::string>();
	bool known = false;
	for (GallaiRoute g : {GallaiRoute::direct, GallaiRoute::hs_fallback, GallaiRoute::cycle_graph})
		if (gallai_route_name(g) == route) {
			r.route = g;
			known = true;
		}
	if (!known) throw parse_error("unknown gallai route '" + route + "'");
	r.merges = j.at("merges").get<int>();
}

void to_json(json& j, const SurveyReport& r) {
	json per_n = json::array();
	for (const SurveyCounts& c : r.per_n)
		per_n.push_back(json{{"n", c.n}, {"members", c.members}, {"hanging_square", c.hanging_square}, {"decomposable", c.decomposable}});
	json violations = json::array();
	for (const SurveyViolation& v : r.violations) violations.push_back(json{{"graph6", v.graph6}, {"reason", v.reason}});
	j = json{{"members", r.members()},
	         {"hanging_square", r.hanging_square()},
	         {"decomposable", r.decomposable()},
	         {"per_n", per_n},
	         {"violations", violations},
	         {"skipped", r.skipped},
	         {"fallback_count", r.fallback_count},
	         {"merge_exhausted_count", r.merge_exhausted_count},
	         {"gallai_checked", r.gallai_checked},
	         {"gallai_within_bound", r.gallai_within_bound}};
	if (!r.timing.empty()) j["timing"] = r.timing;
}

void from_json(const json& j, SurveyReport& r) {
	r.per_n.clear();
	for (const json& c : j.at("per_n"))
		r.per_n.push_back({c.at("n").get<int>(), c.at("members").get<int>(), c.at("hanging_square").get<int>(), c.at("decomposable").get<int>()});
	r.violations.clear();
	for (const json& v : j.at("violations")) r.violations.push_back({v.at("graph6").get<std::string>(), v.at("reason").get<std::string>()});
	r.skipped = j.at("skipped").get<int>();
	r.fallback_count = j.at("fallback_count").get<int>();
	r.merge_exhausted_count = j.at("merge_exhausted_count").get<int>();
	r.gallai_checked = j.at("gallai_checked").get<int>();
	r.gallai_within_bound = j.at("gallai_within_bound").get<int>();
	r.timing = j.value("timing", std::map<std::string, double>{});
}

void to_json(json& j, const FuzzReport& r) {
	j = json{{"kind", merge_kind_name(r.kind)},
	         {"seed", r.seed},
	         {"trials", r.trials},
	         {"generated", r.generated},
	         {"valid", r.valid},
	         {"generator_failures", r.generator_failures},
	         {"mutation_trials", r.mutation_trials},
	         {"mutations_rejected", r.mutations_rejected},
	         {"routes", r.routes},
	         {"failures", r.failures}};
}

void from_json(const json& j, FuzzReport& r) {
	auto kind = parse_merge_kind(j.at("kind").get<std::string>());
	if (!kind) throw parse_error("unknown merge kind");
	r.kind = *kind;
	r.seed = j.at("seed").get<std::uint64_t>();
	r.trials = j.at("trials").get<int>();
	r.generated = j.at("generated").get<int>();
	r.valid = j.at("valid").get<int>();
	r.generator_failures = j.at("generator_failures").get<int>();
	r.mutation_trials = j.at("mutation_trials").get<int>();
	r.mutations_rejected = j.at("mutations_rejected").get<int>();
	r.routes = j.at("routes").get<std::map<std::string, int>>();
	r.failures = j.at("failures").get<std::vector<std::string>>();
}

HangingSquareCertificate certificate_from_document(const json& j) {
	try {
		if (j.contains("certificate")) return j.at("certificate").get<HangingSquareCertificate>();
		return j.get<HangingSquareCertificate>();
	} catch (const json::exception& e) {
		throw parse_error(std::string("certificate JSON: ") + e.what());
	}
}

} // namespace pcd
