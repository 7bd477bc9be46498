#include "pcd/merge.hpp"

#include "pcd/oracle.hpp"

#include <map>
#include <set>

namespace pcd {

namespace {

const std::array<std::pair<MergeKind, const char*>, 9> kNames{{
	{MergeKind::hs_long_cycle, "HS+LongCycle"},
	{MergeKind::hs_square_cycle, "HS+SquareCycle"},
	{MergeKind::skeleton_last_path_cycle, "Skeleton+LastPath+Cycle"},
	{MergeKind::hs_short_path, "HS+ShortPath"},
	{MergeKind::two_basis, "TwoBasis"},
	{MergeKind::tree_path, "Tree+Path"},
	{MergeKind::hs_two_squares, "HS+TwoSquares"},
	{MergeKind::cycle_path, "CyclePath"},
	{MergeKind::two_cycles, "TwoCycles"},
}};

std::vector<Vertex> sorted_vertices(const Walk& w) {
	std::vector<Vertex> vs = w.vertices;
	std::sort(vs.begin(), vs.end());
	return vs;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
	std::vector<Vertex> out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

std::vector<Vertex> difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
	std::vector<Vertex> out;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
	return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Vertex> sorted_set(std::vector<Vertex> vs) {
	std::sort(vs.begin(), vs.end());
	vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
	return vs;
}

bool union_in_class_g(const EdgeList& edges) { return !edges.empty() && in_class_g(edge_subgraph(edges).graph); }

bool is_hanging_square_edges(const EdgeList& edges) {
	Graph g = edge_subgraph(edges).graph;
	return is_connected(g) && find_hs_certificate(edges).has_value();
}

std::map<Vertex, int> degrees(const EdgeList& edges) {
	std::map<Vertex, int> d;
	for (const Edge& e : edges) {
		++d[e.u];
		++d[e.v];
	}
	return d;
}

bool same_edge_set(const Walk& a, const Walk& b) { return sorted_edges(a.edges()) == sorted_edges(b.edges()); }

std::vector<Walk> all_squares(const HangingSquareCertificate& cert) {
	std::vector<Walk> out;
	for (const Bunch& b : cert.bunches)
		for (const Walk& q : b.squares) out.push_back(q);
	return out;
}

// ------------------------------------------------------------ preconditions

void require_walk(Verdict& v, const Walk& w, const char* role) {
	if (!is_simple(w)) v.fail(std::string(role) + " is not a simple path or cycle");
}

void require_host(Verdict& v, const std::optional<HangingSquareCertificate>& host, const char* role) {
	if (!host) {
		v.fail(std::string(role) + " missing");
		return;
	}
	Verdict hv = verify_hs_certificate(host->edges(), *host);
	if (!hv.ok) v.fail(std::string(role) + " is not a verified hanging-square certificate");
}

void require_disjoint(Verdict& v, const EdgeList& a, const EdgeList& b) {
	if (!edges_disjoint(sorted_edges(a), sorted_edges(b))) v.fail("parts share an edge");
}

void require_square_of(Verdict& v, const HangingSquareCertificate& host, const std::optional<Walk>& q) {
	if (!q) {
		v.fail("square Q missing");
		return;
	}
	bool found = false;
	for (const Walk& s : all_squares(host)) found = found || same_edge_set(s, *q);
	if (!found || !q->is_cycle() || q->length() != 4) v.fail("Q is not a square of the host");
}

std::vector<Vertex> free_square_vertices(const HangingSquareCertificate& host, const Walk& q) {
	return difference(sorted_vertices(q), host.skeleton.vertices());
}

Verdict check(const MergeCase& c) {
	Verdict v;
	const Walk& x = c.attached;
	if (c.kind != MergeKind::two_basis) require_walk(v, x, "attached element");
	if (!v.ok) return v;
	switch (c.kind) {
	case MergeKind::hs_long_cycle: {
		require_host(v, c.host, "host");
		if (!v.ok) return v;
		if (!x.is_cycle() || x.length() < 5) v.fail("C must be a cycle of length at least 5");
		require_disjoint(v, c.host->edges(), x.edges());
		if (intersect(c.host->skeleton.vertices(), sorted_vertices(x)).empty()) v.fail("C misses the skeleton of H");
		break;
	}
	case MergeKind::hs_square_cycle: {
		require_host(v, c.host, "host");
		if (!v.ok) return v;
		require_square_of(v, *c.host, c.square);
		if (!v.ok) return v;
		if (!x.is_cycle() || x.length() < 4) v.fail("C must be a cycle of length at least 4");
		require_disjoint(v, c.host->edges(), x.edges());
		if (intersect(free_square_vertices(*c.host, *c.square), sorted_vertices(x)).empty())
			v.fail("C misses V(Q) \\ V(T_H)");
		break;
	}
	case MergeKind::skeleton_last_path_cycle: {
		if (!c.skeleton) {
			v.fail("skeleton missing");
			return v;
		}
		const BuildingSequence& t = *c.skeleton;
		Verdict sv = verify_building_sequence(t.edges(), t);
		if (!sv.ok) v.fail("skeleton sequence does not verify");
		if (t.steps.empty()) v.fail("skeleton has no building path");
		if (!x.is_cycle() || x.length() != 4) v.fail("C must be a square");
		if (!v.ok) return v;
		require_disjoint(v, t.edges(), x.edges());
		if (intersect(t.vertices(), sorted_vertices(x)).empty()) v.fail("C misses T");
		if (!v.ok) return v;
		EdgeList all = edge_union(t.edges(), x.edges());
		if (is_hanging_square_edges(all)) v.fail("T + C is hanging-square");
		EdgeList rest = edge_difference(sorted_edges(t.edges()), sorted_edges(t.steps.back().walk().edges()));
		EdgeList reduced = edge_union(rest, x.edges());
		bool separate = intersect(edge_vertices(rest), sorted_vertices(x)).empty();
		if (!separate && !is_hanging_square_edges(reduced))
			v.fail("[T - E(P)] + C is neither hanging-square nor split into T - E(P) and C");
		break;
	}
	case MergeKind::hs_short_path: {
		require_host(v, c.host, "host");
		if (!v.ok) return v;
		require_square_of(v, *c.host, c.square);
		if (!v.ok) return v;
		if (x.is_cycle() || x.length() < 4 || x.length() > 7) v.fail("P' must be a path of length 4..7");
		require_disjoint(v, c.host->edges(), x.edges());
		std::vector<Vertex> meet = intersect(edge_vertices(c.host->edges()), sorted_vertices(x));
		if (meet.empty() || !subset_of(meet, free_square_vertices(*c.host, *c.square)))
			v.fail("P' must meet H inside V(Q) \\ V(T_H)");
		break;
	}
	case MergeKind::two_basis: {
		require_host(v, c.host, "host");
		require_host(v, c.second_host, "second host");
		if (!v.ok) return v;
		for (const auto* h : {&*c.host, &*c.second_host})
			if (!h->skeleton.steps.empty() || h->bunches.size() != 1 || h->bunches[0].k() != 1)
				v.fail("each host must be one square on a 3-path");
		if (!v.ok) return v;
		require_disjoint(v, c.host->edges(), c.second_host->edges());
		const Walk& q = c.host->bunches[0].squares[0];
		const Walk& q2 = c.second_host->bunches[0].squares[0];
		std::vector<Vertex> allowed = intersect(free_square_vertices(*c.host, q), free_square_vertices(*c.second_host, q2));
		std::vector<Vertex> meet = intersect(edge_vertices(c.host->edges()), edge_vertices(c.second_host->edges()));
		if (meet.empty() || !subset_of(meet, allowed)) v.fail("hosts must meet only at free square vertices of both");
		break;
	}
	case MergeKind::tree_path: {
		if (!c.skeleton) {
			v.fail("skeleton missing");
			return v;
		}
		const BuildingSequence& t = *c.skeleton;
		if (!verify_building_sequence(t.edges(), t).ok) v.fail("skeleton sequence does not verify");
		if (x.is_cycle() || x.length() < 4) v.fail("P must be a path of length at least 4");
		if (!v.ok) return v;
		require_disjoint(v, t.edges(), x.edges());
		std::vector<Vertex> meet = intersect(t.vertices(), sorted_vertices(x));
		if (meet.size() != 1) v.fail("T and P must share exactly one vertex");
		else if (meet[0] == x.front() || meet[0] == x.back()) v.fail("the shared vertex is an end of P");
		if (!v.ok) return v;
		EdgeList all = edge_union(t.edges(), x.edges());
		Graph u = edge_subgraph(all).graph;
		if (!is_tree(u)) v.fail("T + P is not a tree");
		else if (odd_distance(u) < 3) v.fail("T + P has odd distance below 3");
		else if (recognize_skeleton(u)) v.fail("T + P is a skeleton");
		return v;
	}
	case MergeKind::hs_two_squares: {
		require_host(v, c.host, "host");
		if (!v.ok) return v;
		require_square_of(v, *c.host, c.square);
		if (!v.ok) return v;
		if (!x.is_cycle() || x.length() != 4) v.fail("C must be a square");
		require_disjoint(v, c.host->edges(), x.edges());
		if (intersect(edge_vertices(c.host->edges()), sorted_vertices(x)).empty()) v.fail("C misses H");
		if (!v.ok) return v;
		EdgeList all = edge_union(c.host->edges(), x.edges());
		if (union_in_class_g(all) && is_hanging_square_edges(all)) v.fail("H + C is hanging-square");
		EdgeList swapped = edge_union(edge_difference(sorted_edges(c.host->edges()), sorted_edges(c.square->edges())), x.edges());
		if (!is_hanging_square_edges(swapped)) v.fail("[H - E(Q)] + C is not hanging-square");
		break;
	}
	case MergeKind::cycle_path:
	case MergeKind::two_cycles: {
		if (!c.base || !c.base->is_cycle() || !is_simple(*c.base)) {
			v.fail("base cycle missing");
			return v;
		}
		if (c.kind == MergeKind::cycle_path) {
			if (x.is_cycle() || x.length() < 1 || x.length() > 7) v.fail("P must be a path of length at most 7");
		} else {
			for (const Walk* w : {&*c.base, &x})
				if (!w->is_cycle() || w->length() < 4 || w->length() > 7) v.fail("both cycles must have length 4..7");
		}
		require_disjoint(v, c.base->edges(), x.edges());
		if (intersect(sorted_vertices(*c.base), sorted_vertices(x)).empty()) v.fail("the parts share no vertex");
		if (!v.ok) return v;
		if (!is_triangle_free(edge_subgraph(c.edges()).graph)) v.fail("the union has a triangle");
		return v;
	}
	}
	if (v.ok && !union_in_class_g(c.edges())) v.fail("the union is not in class G");
	return v;
}

// ------------------------------------------------------------ constructions

struct Host {
	BuildingSequence skeleton;
	std::vector<Walk> squares;
};

std::vector<Walk> sequence_elements(const BuildingSequence& seq) {
	std::vector<Walk> out;
	for (const BuildingPath& bp : seq.steps) out.push_back(bp.walk());
	return out;
}

bool valid_for(const EdgeList& all, const Decomposition& d) {
	Subgraph s = edge_subgraph(all);
	std::map<Vertex, Vertex> local;
	for (size_t i = 0; i < s.to_host.size(); ++i) local[s.to_host[i]] = static_cast<Vertex>(i);
	Decomposition mapped = d;
	for (Walk& w : mapped.elements)
		for (Vertex& x : w.vertices) {
			auto it = local.find(x);
			if (it == local.end()) return false;
			x = it->second;
		}
	return validate_decomposition(s.graph, mapped).ok;
}

// brrb-paths of the host skeleton, most overlap with `focus` first
std::vector<Walk> ranked_starts(const BuildingSequence& skeleton, const std::vector<Vertex>& focus) {
	std::vector<Walk> starts = brrb_paths(skeleton.edges());
	std::stable_sort(starts.begin(), starts.end(), [&](const Walk& a, const Walk& b) {
		return intersect(sorted_vertices(a), focus).size() > intersect(sorted_vertices(b), focus).size();
	});
	return starts;
}

// Reduce to the start path: with P0 starting a building sequence, every other
// building path and square is already a valid element, so only P0 together
// with the attachments (and, when widened, their neighbours) needs solving.
std::optional<MergeResult> core_merge(const Host& host, const std::vector<Walk>& attached, const std::vector<Walk>& core_squares) {
	std::vector<Vertex> focus;
	for (const Walk& w : attached) focus.insert(focus.end(), w.vertices.begin(), w.vertices.end());
	for (const Walk& w : core_squares) focus.insert(focus.end(), w.vertices.begin(), w.vertices.end());
	focus = sorted_set(focus);
	std::vector<Walk> starts = ranked_starts(host.skeleton, focus);
	SearchOptions opts;
	opts.memoize_failures = true;

	for (int ring = 0; ring < 2; ++ring)
		for (const Walk& p0 : starts) {
			BuildingSequence seq = reroot_sequence(host.skeleton, p0);
			std::vector<Walk> fixed = sequence_elements(seq);
			for (const Walk& q : host.squares) {
				bool in_core = false;
				for (const Walk& cq : core_squares) in_core = in_core || same_edge_set(cq, q);
				if (!in_core) fixed.push_back(q);
			}
			EdgeList core = p0.edges();
			for (const Walk& w : attached) core = edge_union(core, w.edges());
			for (const Walk& w : core_squares) core = edge_union(core, w.edges());
			if (ring == 1) {
				std::vector<Vertex> cv = edge_vertices(core);
				std::vector<Walk> keep;
				for (const Walk& w : fixed) {
					if (intersect(sorted_vertices(w), cv).empty()) keep.push_back(w);
					else core = edge_union(core, w.edges());
				}
				fixed = keep;
			}
			if (static_cast<int>(core.size()) > kOracleEdgeLimit) continue;
			auto d = search_decomposition(core, opts);
			if (!d) continue;
			Decomposition out = *d;
			for (const Walk& w : fixed) out.elements.push_back(w);
			out.min_length = 4;
			return MergeResult{out, ring == 0 ? "core" : "core+ring"};
		}
	return std::nullopt;
}

std::optional<MergeResult> full_search(const EdgeList& all) {
	if (static_cast<int>(all.size()) > kOracleEdgeLimit) return std::nullopt;
	SearchOptions opts;
	opts.memoize_failures = true;
	auto d = search_decomposition(all, opts);
	if (!d) return std::nullopt;
	return MergeResult{*d, "full"};
}

Walk rotate_cycle(const Walk& c, Vertex v) {
	auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
	std::vector<Vertex> vs(it, c.vertices.end());
	vs.insert(vs.end(), c.vertices.begin(), it);
	return Walk::cycle(vs);
}

// a brrb-path ending at v (oriented so that v is last), or having v second
std::optional<Walk> start_at(const BuildingSequence& skeleton, Vertex v, bool as_end) {
	for (const Walk& p : brrb_paths(skeleton.edges())) {
		if (as_end && (p.front() == v || p.back() == v)) return oriented_from(p, p.front() == v ? p.back() : p.front());
		if (!as_end && (p.vertices[1] == v || p.vertices[2] == v)) return p.vertices[1] == v ? p : reversed(p);
	}
	return std::nullopt;
}

std::optional<MergeResult> explicit_long_cycle(const HangingSquareCertificate& host, const Walk& c) {
	std::map<Vertex, int> deg = degrees(host.skeleton.edges());
	std::vector<Vertex> meet = intersect(host.skeleton.vertices(), sorted_vertices(c));
	std::vector<Walk> elements;
	Walk p0;
	auto black = std::find_if(meet.begin(), meet.end(), [&](Vertex v) { return deg[v] % 2 == 1; });
	if (black != meet.end()) {
		// P ends at v: P + vv' and the rest of C
		Vertex v = *black;
		p0 = *start_at(host.skeleton, v, true);
		Walk rc = rotate_cycle(c, v);
		std::vector<Vertex> first = p0.vertices;
		first.push_back(rc.vertices[1]);
		std::vector<Vertex> second(rc.vertices.begin() + 1, rc.vertices.end());
		second.push_back(v);
		elements = {Walk::path(first), Walk::path(second)};
	} else {
		// v inside P = x v w y: u v' v w y and the rest of C closed with v x
		Vertex v = meet.front();
		auto s = start_at(host.skeleton, v, false);
		if (!s) return std::nullopt;
		p0 = *s;
		Walk rc = rotate_cycle(c, v);
		const auto& r = rc.vertices;
		elements.push_back(Walk::path({r[2], r[1], v, p0.vertices[2], p0.vertices[3]}));
		std::vector<Vertex> second(r.begin() + 2, r.end());
		second.push_back(v);
		second.push_back(p0.vertices[0]);
		elements.push_back(Walk::path(second));
	}
	BuildingSequence seq = reroot_sequence(host.skeleton, p0);
	Decomposition d{elements, 4};
	for (const Walk& w : sequence_elements(seq)) d.elements.push_back(w);
	for (const Walk& q : all_squares(host)) d.elements.push_back(q);
	return MergeResult{d, "explicit"};
}

std::optional<MergeResult> explicit_tree_path(const BuildingSequence& t, const Walk& p) {
	std::vector<Vertex> meet = intersect(t.vertices(), sorted_vertices(p));
	Vertex v = meet.front();
	auto at = std::find(p.vertices.begin(), p.vertices.end(), v);
	// halves of P, both starting at v, longer one first
	std::vector<Vertex> h1(at, p.vertices.end());
	std::vector<Vertex> h2(p.vertices.begin(), at + 1);
	std::reverse(h2.begin(), h2.end());
	if (h1.size() < h2.size()) std::swap(h1, h2);
	std::map<Vertex, int> deg = degrees(t.edges());
	std::vector<Walk> elements;
	Walk p0;
	if (deg[v] % 2 == 1) {
		auto s = start_at(t, v, true);
		if (!s) return std::nullopt;
		p0 = *s;
		std::vector<Vertex> joined = p0.vertices;
		joined.insert(joined.end(), h2.begin() + 1, h2.end());
		elements = {Walk::path(h1), Walk::path(joined)};
	} else {
		auto s = start_at(t, v, false);
		if (!s) return std::nullopt;
		p0 = *s;
		std::vector<Vertex> first{p0.vertices[0]};
		first.insert(first.end(), h1.begin(), h1.end());
		std::vector<Vertex> second{p0.vertices[3], p0.vertices[2]};
		second.insert(second.end(), h2.begin(), h2.end());
		elements = {Walk::path(first), Walk::path(second)};
	}
	BuildingSequence seq = reroot_sequence(t, p0);
	Decomposition d{elements, 4};
	for (const Walk& w : sequence_elements(seq)) d.elements.push_back(w);
	return MergeResult{d, "explicit"};
}

std::optional<MergeResult> explicit_two_cycles(const Walk& c, const Walk& c2) {
	std::vector<Vertex> meet = intersect(sorted_vertices(c), sorted_vertices(c2));
	if (meet.size() != 1) return std::nullopt;
	Vertex v = meet.front();
	const auto a = rotate_cycle(c, v).vertices;
	const auto b = rotate_cycle(c2, v).vertices;
	std::vector<Vertex> first{a.back()};
	first.insert(first.end(), b.begin(), b.end());
	std::vector<Vertex> second{b.back()};
	second.insert(second.end(), a.begin(), a.end());
	return MergeResult{Decomposition{{Walk::path(first), Walk::path(second)}, 4}, "explicit"};
}

std::optional<MergeResult> construct(const MergeCase& c) {
	const EdgeList all = c.edges();
	auto accept = [&](std::optional<MergeResult> r) -> std::optional<MergeResult> {
		if (r && valid_for(all, r->decomposition)) return r;
		return std::nullopt;
	};
	switch (c.kind) {
	case MergeKind::hs_long_cycle:
		if (auto r = accept(explicit_long_cycle(*c.host, c.attached))) return r;
		if (auto r = accept(core_merge({c.host->skeleton, all_squares(*c.host)}, {c.attached}, {}))) return r;
		break;
	case MergeKind::hs_square_cycle:
	case MergeKind::hs_short_path:
	case MergeKind::hs_two_squares:
		if (auto r = accept(core_merge({c.host->skeleton, all_squares(*c.host)}, {c.attached}, {*c.square}))) return r;
		break;
	case MergeKind::skeleton_last_path_cycle:
		if (auto r = accept(core_merge({*c.skeleton, {}}, {c.attached}, {}))) return r;
		break;
	case MergeKind::tree_path:
		if (auto r = accept(explicit_tree_path(*c.skeleton, c.attached))) return r;
		if (auto r = accept(core_merge({*c.skeleton, {}}, {c.attached}, {}))) return r;
		break;
	case MergeKind::two_basis:
		break;
	case MergeKind::cycle_path: {
		auto d = split_into_two_paths(all);
		if (d && valid_for(all, *d)) return MergeResult{*d, "trail-split"};
		return std::nullopt;
	}
	case MergeKind::two_cycles: {
		if (auto r = accept(explicit_two_cycles(*c.base, c.attached))) return r;
		SearchOptions opts;
		opts.allow_cycles = false;
		opts.max_elements = 2;
		auto d = search_decomposition(all, opts);
		if (d) return MergeResult{*d, "search"};
		return std::nullopt;
	}
	}
	return accept(full_search(all));
}

} // namespace

std::string merge_kind_name(MergeKind kind) {
	for (const auto& [k, name] : kNames)
		if (k == kind) return name;
	return "?";
}

std::optional<MergeKind> parse_merge_kind(std::string_view name) {
	for (const auto& [k, n] : kNames)
		if (name == n) return k;
	return std::nullopt;
}

EdgeList MergeCase::edges() const {
	EdgeList out = attached.edges();
	if (host) out = edge_union(out, host->edges());
	if (second_host) out = edge_union(out, second_host->edges());
	if (skeleton) out = edge_union(out, skeleton->edges());
	if (base) out = edge_union(out, base->edges());
	return sorted_edges(out);
}

Verdict check_merge_preconditions(const MergeCase& c) { return check(c); }

MergeResult lemma_merge_detailed(const MergeCase& c) {
	Verdict v = check(c);
	if (!v.ok) {
		std::string detail = merge_kind_name(c.kind) + ":";
		for (const auto& r : v.reasons) detail += " " + r + ";";
		throw precondition_violated(detail);
	}
	auto r = construct(c);
	if (!r) throw merge_exhausted(merge_kind_name(c.kind) + ": no construction found");
	if (c.kind == MergeKind::cycle_path) r->decomposition.min_length = 1;
	return *r;
}

Decomposition lemma_merge(const MergeCase& c) { return lemma_merge_detailed(c).decomposition; }

std::optional<Decomposition> split_into_two_paths(const EdgeList& edges) {
	SearchOptions opts;
	opts.min_length = 1;
	opts.allow_cycles = false;
	opts.max_elements = 2;
	opts.longest_first = true;
	auto d = search_decomposition(edges, opts);
	if (d && d->elements.size() != 2) return std::nullopt;
	return d;
}

} // namespace pcd
