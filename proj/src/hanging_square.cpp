#include "pcd/hanging_square.hpp"

#include <map>
#include <set>

namespace pcd {

EdgeList Bunch::edges() const {
	EdgeList out;
	for (const Walk& q : squares) {
		EdgeList e = q.edges();
		out.insert(out.end(), e.begin(), e.end());
	}
	return sorted_edges(std::move(out));
}

std::vector<Vertex> Bunch::vertices() const { return edge_vertices(edges()); }

EdgeList HangingSquareCertificate::edges() const {
	EdgeList out = skeleton.edges();
	for (const Bunch& b : bunches) out = edge_union(out, b.edges());
	return out;
}

namespace {

// adjacency of an edge set in host ids
struct EdgeView {
	std::map<Vertex, std::vector<Vertex>> adj;

	explicit EdgeView(const EdgeList& edges) {
		for (const Edge& e : edges) {
			adj[e.u].push_back(e.v);
			adj[e.v].push_back(e.u);
		}
		for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
	}
	int degree(Vertex v) const {
		auto it = adj.find(v);
		return it == adj.end() ? 0 : static_cast<int>(it->second.size());
	}
	const std::vector<Vertex>& neighbors(Vertex v) const {
		static const std::vector<Vertex> none;
		auto it = adj.find(v);
		return it == adj.end() ? none : it->second;
	}
	bool has_edge(Vertex a, Vertex b) const {
		const auto& nb = neighbors(a);
		return std::binary_search(nb.begin(), nb.end(), b);
	}
	// common neighbours of p and q whose degree is exactly 2
	std::vector<Vertex> middles(Vertex p, Vertex q) const {
		std::vector<Vertex> out;
		const auto& a = neighbors(p);
		const auto& b = neighbors(q);
		std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
		out.erase(std::remove_if(out.begin(), out.end(), [&](Vertex m) { return degree(m) != 2; }), out.end());
		return out;
	}
};

Bunch make_bunch(Vertex a, Vertex b, const std::vector<Vertex>& middles) {
	Bunch bunch{a, b, {}, {}};
	for (size_t i = 0; i + 1 < middles.size(); i += 2) bunch.squares.push_back(Walk::cycle({a, middles[i], b, middles[i + 1]}));
	return bunch;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// the diagonal through the vertex of largest degree first
std::vector<std::pair<Vertex, Vertex>> diagonals(const Walk& square, const EdgeView& view) {
	const auto& s = square.vertices;
	std::pair<Vertex, Vertex> d0{std::min(s[0], s[2]), std::max(s[0], s[2])};
	std::pair<Vertex, Vertex> d1{std::min(s[1], s[3]), std::max(s[1], s[3])};
	int m0 = std::max(view.degree(s[0]), view.degree(s[2]));
	int m1 = std::max(view.degree(s[1]), view.degree(s[3]));
	if (m1 > m0) std::swap(d0, d1);
	return {d0, d1};
}

// degree conditions on an occupied path, written with the bunch joints at y0 and y2
bool occupation_degrees_ok(const EdgeView& h, const EdgeView& reduced, const std::vector<Vertex>& y) {
	if (h.degree(y[1]) != 2) return false;
	int d0 = reduced.degree(y[0]), d2 = reduced.degree(y[2]), d3 = reduced.degree(y[3]);
	bool first = d0 >= 1 && d2 == 2 && d3 >= 1;
	bool second = d0 == 1 && d2 > 2 && d3 >= 1;
	return first != second;
}

std::vector<Vertex> normalized_occupation(const OccupationRecord& r) {
	std::vector<Vertex> y = r.path.vertices;
	if (r.at == OccupiedAt::x1_x3) std::reverse(y.begin(), y.end());
	return y;
}

bool same_edges(const Walk& a, const Walk& b) { return sorted_edges(a.edges()) == sorted_edges(b.edges()); }

} // namespace

std::vector<Walk> find_good_squares(const Graph& g) {
	std::vector<Walk> out;
	int n = g.vertex_count();
	for (Vertex a = 0; a < n; ++a) {
		const auto& na = g.neighbors(a);
		for (size_t i = 0; i < na.size(); ++i)
			for (size_t j = i + 1; j < na.size(); ++j) {
				Vertex b = na[i], d = na[j];
				if (b < a || d < a) continue;
				for (Vertex c : g.neighbors(b)) {
					if (c <= a || c == d || !g.has_edge(c, d)) continue;
					Walk sq = Walk::cycle({a, b, c, d});
					int twos = 0;
					for (Vertex v : sq.vertices) twos += g.degree(v) == 2;
					if (twos == 2 || twos == 3) out.push_back(sq);
				}
			}
	}
	std::sort(out.begin(), out.end(), [](const Walk& x, const Walk& y) { return x.vertices < y.vertices; });
	return out;
}

std::vector<Bunch> find_maximal_bunches(const Graph& g) {
	EdgeView view(g.edges());
	std::set<std::pair<Vertex, Vertex>> seen;
	std::vector<Bunch> out;
	for (const Walk& sq : find_good_squares(g)) {
		auto [a, b] = diagonals(sq, view).front();
		if (!seen.insert({a, b}).second) continue;
		std::vector<Vertex> m = view.middles(a, b);
		if (m.size() % 2 == 1) m.pop_back();
		if (m.size() < 2) continue;
		Bunch bunch = make_bunch(a, b, m);
		for (Vertex j : {a, b})
			if (view.degree(j) > static_cast<int>(m.size())) bunch.identified_joints.push_back(j);
		out.push_back(std::move(bunch));
	}
	return out;
}

// ---------------------------------------------------------------- verification

Verdict verify_hs_certificate(const EdgeList& edges, const HangingSquareCertificate& cert) {
	Verdict verdict;
	EdgeList tree = cert.skeleton.edges();
	Verdict seq = verify_building_sequence(tree, cert.skeleton);
	if (!seq) {
		for (auto& r : seq.reasons) verdict.fail("skeleton: " + r);
		return verdict;
	}
	std::vector<Vertex> tv = edge_vertices(tree);
	EdgeView host(edges);

	// bunches: shape, identified joints, placement relative to the skeleton
	std::set<std::pair<Vertex, Vertex>> pairs;
	EdgeList all = tree;
	size_t total = tree.size();
	for (size_t i = 0; i < cert.bunches.size(); ++i) {
		const Bunch& b = cert.bunches[i];
		std::string tag = "bunch " + std::to_string(i);
		if (b.squares.empty()) {
			verdict.fail(tag + " has no squares");
			continue;
		}
		if (b.a == b.b || host.has_edge(b.a, b.b)) verdict.fail(tag + " joints are equal or adjacent");
		if (!pairs.insert({std::min(b.a, b.b), std::max(b.a, b.b)}).second) verdict.fail(tag + " repeats a joint pair (not maximal)");
		std::set<Vertex> middles;
		for (const Walk& q : b.squares) {
			const auto& s = q.vertices;
			bool shape = q.is_cycle() && s.size() == 4 && is_simple(q) &&
			             ((s[0] == b.a && s[2] == b.b) || (s[0] == b.b && s[2] == b.a) || (s[1] == b.a && s[3] == b.b) ||
			              (s[1] == b.b && s[3] == b.a));
			if (!shape) {
				verdict.fail(tag + " has a square without both joints opposite");
				continue;
			}
			for (Vertex v : s)
				if (v != b.a && v != b.b && !middles.insert(v).second) verdict.fail(tag + " squares meet outside the joints");
		}
		EdgeList be = b.edges();
		size_t raw = 4 * b.squares.size();
		if (be.size() != raw) verdict.fail(tag + " squares are not edge-disjoint");
		total += raw;
		all = edge_union(all, be);
		std::vector<Vertex> identified;
		for (Vertex j : {std::min(b.a, b.b), std::max(b.a, b.b)})
			if (contains(tv, j)) identified.push_back(j);
		if (identified.empty()) verdict.fail(tag + " has no joint on the skeleton");
		if (identified != b.identified_joints) verdict.fail(tag + " identified joints disagree with the skeleton");
		for (Vertex m : middles)
			if (contains(tv, m)) verdict.fail(tag + " meets the skeleton outside its joints");
	}
	if (!verdict) return verdict;
	for (size_t i = 0; i < cert.bunches.size(); ++i)
		for (size_t j = i + 1; j < cert.bunches.size(); ++j) {
			std::vector<Vertex> vi = cert.bunches[i].vertices(), vj = cert.bunches[j].vertices(), common;
			std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(common));
			for (Vertex v : common)
				if (!contains(tv, v)) verdict.fail("bunches " + std::to_string(i) + " and " + std::to_string(j) + " meet off the skeleton");
		}

	// partition of the host edges
	if (all.size() != total) verdict.fail("skeleton and bunches overlap in edges");
	if (all != sorted_edges(edges)) verdict.fail("skeleton and bunches do not cover exactly the graph's edges");
	if (!verdict) return verdict;

	// occupations of 2-bunches
	std::vector<Walk> brrb = brrb_paths(tree);
	std::vector<int> records(cert.bunches.size(), 0);
	for (size_t r = 0; r < cert.occupations.size(); ++r) {
		const OccupationRecord& rec = cert.occupations[r];
		std::string tag = "occupation " + std::to_string(r);
		if (rec.bunch < 0 || rec.bunch >= static_cast<int>(cert.bunches.size())) {
			verdict.fail(tag + " refers to a missing bunch");
			continue;
		}
		const Bunch& b = cert.bunches[static_cast<size_t>(rec.bunch)];
		++records[static_cast<size_t>(rec.bunch)];
		if (b.identified_joints.size() != 2) verdict.fail(tag + " refers to a 1-bunch");
		bool on_tree = rec.path.vertices.size() == 4 && !rec.path.is_cycle() &&
		               std::any_of(brrb.begin(), brrb.end(), [&](const Walk& w) { return w.vertices.size() == 4 && same_edges(w, rec.path) && is_simple(rec.path); });
		if (!on_tree) {
			verdict.fail(tag + " path is not a brrb-path of the skeleton");
			continue;
		}
		// orientation must also match: same vertex sequence up to reversal
		bool oriented = std::any_of(brrb.begin(), brrb.end(), [&](const Walk& w) { return w == rec.path || reversed(w) == rec.path; });
		if (!oriented) {
			verdict.fail(tag + " path is not a brrb-path of the skeleton");
			continue;
		}
		std::vector<Vertex> y = normalized_occupation(rec);
		std::pair<Vertex, Vertex> at{std::min(y[0], y[2]), std::max(y[0], y[2])};
		if (at != std::pair<Vertex, Vertex>{std::min(b.a, b.b), std::max(b.a, b.b)}) {
			verdict.fail(tag + " joints are not at the recorded positions");
			continue;
		}
		EdgeView reduced(edge_difference(edges, b.edges()));
		if (!occupation_degrees_ok(host, reduced, y)) verdict.fail(tag + " violates the occupied-path degree conditions");
		for (size_t s = 0; s < r; ++s)
			if (same_edges(cert.occupations[s].path, rec.path)) verdict.fail(tag + " reuses an occupied path");
	}
	for (size_t i = 0; i < cert.bunches.size(); ++i) {
		bool two = cert.bunches[i].identified_joints.size() == 2;
		if (two && records[i] != 1) verdict.fail("2-bunch " + std::to_string(i) + " needs exactly one occupation record");
	}
	return verdict;
}

Verdict verify_hs_certificate(const Graph& g, const HangingSquareCertificate& cert) {
	Verdict verdict = verify_hs_certificate(g.edges(), cert);
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (g.degree(v) == 0) {
			verdict.fail("isolated vertex " + std::to_string(v));
			break;
		}
	return verdict;
}

Decomposition hs_canonical_decomposition(const HangingSquareCertificate& cert) {
	EdgeList edges = cert.edges();
	Verdict v = verify_hs_certificate(edges, cert);
	if (!v) throw unverified_certificate(v.reasons.empty() ? "certificate rejected" : v.reasons.front());
	Decomposition d;
	d.min_length = 3;
	d.elements.push_back(Walk::path(cert.skeleton.start));
	for (const BuildingPath& bp : cert.skeleton.steps) d.elements.push_back(bp.walk());
	for (const Bunch& b : cert.bunches)
		for (const Walk& q : b.squares) d.elements.push_back(q);
	return d;
}

// ---------------------------------------------------------------- recognition

namespace {

struct Peeled {
	Vertex p, q;
	std::vector<Vertex> middles;
};

class HsSearch {
public:
	explicit HsSearch(const EdgeList& edges) : host_(sorted_edges(edges)), host_view_(host_) {}

	std::optional<HangingSquareCertificate> run() { return rec(host_); }

private:
	// failure depends on the remaining edges and on how the removed edges were grouped
	using Key = std::pair<EdgeList, std::vector<std::vector<Vertex>>>;

	Key key(const EdgeList& current) const {
		std::vector<std::vector<Vertex>> groups;
		for (const Peeled& b : stack_) {
			std::vector<Vertex> g{std::min(b.p, b.q), std::max(b.p, b.q)};
			g.insert(g.end(), b.middles.begin(), b.middles.end());
			groups.push_back(std::move(g));
		}
		std::sort(groups.begin(), groups.end());
		return {current, groups};
	}

	std::optional<HangingSquareCertificate> rec(const EdgeList& current) {
		if (failed_.count(key(current))) return std::nullopt;
		std::vector<Vertex> vs = edge_vertices(current);
		if (current.size() + 1 == vs.size()) {
			// connected by construction, so this is a tree
			if (auto seq = recognize_skeleton(current))
				if (auto cert = assemble(*seq)) return cert;
			failed_.insert(key(current));
			return std::nullopt;
		}
		Subgraph sub = edge_subgraph(current);
		EdgeView view(current);
		std::vector<std::pair<Vertex, Vertex>> pairs;
		for (const Walk& local : find_good_squares(sub.graph))
			for (auto d : diagonals(sub.lift(local), view))
				if (std::find(pairs.begin(), pairs.end(), d) == pairs.end()) pairs.push_back(d);
		for (auto [p, q] : pairs) {
			std::vector<Vertex> m = view.middles(p, q);
			if (m.size() < 2) continue;
			std::vector<std::vector<Vertex>> options;
			if (m.size() % 2 == 0) options.push_back(m);
			else
				for (size_t skip = m.size(); skip-- > 0;) {
					std::vector<Vertex> o = m;
					o.erase(o.begin() + static_cast<long>(skip));
					options.push_back(o);
				}
			for (const auto& option : options) {
				EdgeList be;
				for (Vertex x : option) {
					be.emplace_back(p, x);
					be.emplace_back(x, q);
				}
				EdgeList rest = edge_difference(current, be);
				if (rest.empty() || edge_components(rest).size() != 1) continue;
				stack_.push_back({p, q, option});
				auto cert = rec(rest);
				stack_.pop_back();
				if (cert) return cert;
			}
		}
		failed_.insert(key(current));
		return std::nullopt;
	}

	std::optional<HangingSquareCertificate> assemble(const BuildingSequence& seq) {
		HangingSquareCertificate cert;
		cert.skeleton = seq;
		std::vector<Vertex> tv = seq.vertices();
		// bunches in peel order reversed, so the first peeled is listed last
		std::vector<size_t> two_bunches;
		for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
			std::vector<Vertex> identified;
			for (Vertex j : {std::min(it->p, it->q), std::max(it->p, it->q)})
				if (contains(tv, j)) identified.push_back(j);
			if (identified.empty()) return std::nullopt;
			Vertex a = identified.front();
			Vertex b = a == it->p ? it->q : it->p;
			Bunch bunch = make_bunch(a, b, it->middles);
			bunch.identified_joints = identified;
			if (identified.size() == 2) two_bunches.push_back(cert.bunches.size());
			cert.bunches.push_back(std::move(bunch));
		}
		// candidate occupied paths for each 2-bunch
		std::vector<Walk> brrb = brrb_paths(seq.edges());
		std::vector<std::vector<OccupationRecord>> choices;
		for (size_t idx : two_bunches) {
			const Bunch& b = cert.bunches[idx];
			EdgeView reduced(edge_difference(host_, b.edges()));
			std::vector<OccupationRecord> opts;
			for (const Walk& w : brrb) {
				const auto& x = w.vertices;
				auto matches = [&](Vertex s, Vertex t) { return (s == b.a && t == b.b) || (s == b.b && t == b.a); };
				for (OccupiedAt at : {OccupiedAt::x0_x2, OccupiedAt::x1_x3}) {
					bool hit = at == OccupiedAt::x0_x2 ? matches(x[0], x[2]) : matches(x[1], x[3]);
					if (!hit) continue;
					OccupationRecord r{w, at, static_cast<int>(idx)};
					if (occupation_degrees_ok(host_view_, reduced, normalized_occupation(r))) opts.push_back(r);
				}
			}
			if (opts.empty()) return std::nullopt;
			choices.push_back(std::move(opts));
		}
		std::vector<OccupationRecord> picked;
		if (!match(choices, 0, picked)) return std::nullopt;
		cert.occupations = picked;
		if (!verify_hs_certificate(host_, cert)) return std::nullopt;
		return cert;
	}

	static bool match(const std::vector<std::vector<OccupationRecord>>& choices, size_t i, std::vector<OccupationRecord>& picked) {
		if (i == choices.size()) return true;
		for (const OccupationRecord& r : choices[i]) {
			bool used = std::any_of(picked.begin(), picked.end(), [&](const OccupationRecord& o) { return same_edges(o.path, r.path); });
			if (used) continue;
			picked.push_back(r);
			if (match(choices, i + 1, picked)) return true;
			picked.pop_back();
		}
		return false;
	}

	EdgeList host_;
	EdgeView host_view_;
	std::vector<Peeled> stack_;
	std::set<Key> failed_;
};

} // namespace

std::optional<HangingSquareCertificate> find_hs_certificate(const EdgeList& edges) {
	if (edges.empty() || edge_components(edges).size() != 1) return std::nullopt;
	return HsSearch(edges).run();
}

std::optional<HangingSquareCertificate> recognize_hanging_square(const Graph& g) {
	ClassGReport r = class_g_report(g);
	if (!r.member) throw not_in_class_g("graph is not connected, triangle-free with odd distance >= 3 and an edge");
	return find_hs_certificate(g.edges());
}

} // namespace pcd
