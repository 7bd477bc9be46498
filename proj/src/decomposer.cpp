#include "pcd/decomposer.hpp"

#include "pcd/merge.hpp"
#include "pcd/oracle.hpp"

#include <map>
#include <queue>
#include <set>

namespace pcd {

namespace {

bool edges_in_class_g(const EdgeList& edges) { return !edges.empty() && in_class_g(edge_subgraph(edges).graph); }

// ---------------------------------------------------------------- trees

class TreeSolver {
public:
	std::optional<TreeResult> solve(const EdgeList& edges) {
		auto it = memo_.find(edges);
		if (it != memo_.end()) return it->second;
		memo_[edges] = std::nullopt; // re-entry on the same tree is a dead end
		std::optional<TreeResult> r = attempt(edges);
		memo_[edges] = r;
		return r;
	}

private:
	struct View {
		Graph g; // host ids
		std::vector<Vertex> vertices;
		std::vector<Vertex> odd;
	};

	static View view(const EdgeList& edges) {
		View w{graph_from_edges(edges), edge_vertices(edges), {}};
		for (Vertex v : w.vertices)
			if (w.g.degree(v) % 2 == 1) w.odd.push_back(v);
		return w;
	}

	std::optional<TreeResult> attempt(const EdgeList& edges) {
		if (auto seq = recognize_skeleton(edges)) return TreeResult{*seq};
		View w = view(edges);
		if (auto r = leaf_extension(edges, w)) return r;
		if (auto r = path_removal(edges, w)) return r;
		if (auto r = three_path_split(edges, w)) return r;
		return std::nullopt;
	}

	// A leaf whose nearest other odd vertex is at distance >= 4: solve T - vu
	// and extend at u.
	std::optional<TreeResult> leaf_extension(const EdgeList& edges, const View& w) {
		for (Vertex v : w.vertices) {
			if (w.g.degree(v) != 1) continue;
			std::vector<int> dist = bfs_distances(w.g, v);
			bool far = true;
			for (Vertex o : w.odd)
				if (o != v && dist[static_cast<size_t>(o)] < 4) far = false;
			if (!far) continue;
			Vertex u = w.g.neighbors(v).front();
			EdgeList rest = edge_difference(edges, {Edge(u, v)});
			if (!edges_in_class_g(rest)) continue;
			auto sub = solve(rest);
			if (!sub) continue;
			if (auto* d = std::get_if<Decomposition>(&*sub)) {
				Decomposition out = *d;
				for (Walk& e : out.elements) {
					if (e.back() == u) e.vertices.push_back(v);
					else if (e.front() == u) e.vertices.insert(e.vertices.begin(), v);
					else continue;
					return TreeResult{out};
				}
				continue;
			}
			const BuildingSequence& seq = std::get<BuildingSequence>(*sub);
			for (const Walk& p : brrb_paths(seq.edges())) {
				if (p.front() != u && p.back() != u) continue;
				Walk start = oriented_from(p, p.front() == u ? p.back() : p.front());
				BuildingSequence re = reroot_sequence(seq, start);
				std::vector<Vertex> first = start.vertices;
				first.push_back(v);
				Decomposition out{{Walk::path(first)}, 4};
				for (const BuildingPath& bp : re.steps) out.elements.push_back(bp.walk());
				return TreeResult{out};
			}
		}
		return std::nullopt;
	}

	// the path from a leaf through degree-2 vertices up to the first vertex of
	// degree >= 3 (or to the other leaf when the tree is a path)
	static std::vector<Vertex> leg(const Graph& g, Vertex leaf) {
		std::vector<Vertex> out{leaf};
		Vertex prev = -1, cur = leaf;
		while (true) {
			Vertex next = -1;
			for (Vertex x : g.neighbors(cur))
				if (x != prev) next = x;
			if (next < 0) break;
			out.push_back(next);
			if (g.degree(next) != 2) break;
			prev = cur;
			cur = next;
		}
		return out;
	}

	// A leaf-to-leaf path of length >= 4 whose removal keeps the tree connected:
	// two legs meeting at the same branch vertex.
	std::optional<TreeResult> path_removal(const EdgeList& edges, const View& w) {
		std::map<Vertex, std::vector<std::vector<Vertex>>> legs;
		for (Vertex v : w.vertices) {
			if (w.g.degree(v) != 1) continue;
			std::vector<Vertex> l = leg(w.g, v);
			if (w.g.degree(l.back()) == 1) {
				// the tree is a path
				if (l.size() >= 5) return TreeResult{Decomposition{{Walk::path(l)}, 4}};
				return std::nullopt;
			}
			legs[l.back()].push_back(l);
		}
		for (const auto& [branch, ls] : legs)
			for (size_t i = 0; i < ls.size(); ++i)
				for (size_t j = i + 1; j < ls.size(); ++j) {
					if (ls[i].size() + ls[j].size() - 2 < 4) continue;
					std::vector<Vertex> pv = ls[i];
					pv.insert(pv.end(), ls[j].rbegin() + 1, ls[j].rend());
					Walk p = Walk::path(pv);
					EdgeList rest = edge_difference(edges, sorted_edges(p.edges()));
					if (!edges_in_class_g(rest)) continue;
					auto sub = solve(rest);
					if (!sub) continue;
					if (auto* d = std::get_if<Decomposition>(&*sub)) {
						Decomposition out = *d;
						out.elements.push_back(p);
						return TreeResult{out};
					}
					MergeCase mc;
					mc.kind = MergeKind::tree_path;
					mc.skeleton = std::get<BuildingSequence>(*sub);
					mc.attached = p;
					if (!check_merge_preconditions(mc).ok) continue;
					try {
						return TreeResult{lemma_merge(mc)};
					} catch (const error&) {
						continue;
					}
				}
		return std::nullopt;
	}

	// Split at a 3-path v0v1v2v3 from a leaf to an odd vertex: the components
	// H1, H2, H3 of T - E(P') at v1, v2, v3; P' joins one of them and the
	// others are solved on their own.
	std::optional<TreeResult> three_path_split(const EdgeList& edges, const View& w) {
		for (Vertex v0 : w.vertices) {
			if (w.g.degree(v0) != 1) continue;
			std::vector<int> dist = bfs_distances(w.g, v0);
			for (Vertex v3 : w.odd) {
				if (dist[static_cast<size_t>(v3)] != 3) continue;
				std::vector<Vertex> pv{v3};
				while (pv.back() != v0)
					for (Vertex x : w.g.neighbors(pv.back()))
						if (dist[static_cast<size_t>(x)] == dist[static_cast<size_t>(pv.back())] - 1) {
							pv.push_back(x);
							break;
						}
				std::reverse(pv.begin(), pv.end());
				Walk p = Walk::path(pv);
				EdgeList rest = edge_difference(edges, sorted_edges(p.edges()));
				std::vector<EdgeList> parts = edge_components(rest);
				if (parts.size() < 2) continue;
				for (size_t i = 0; i < parts.size(); ++i) {
					EdgeList joined = edge_union(parts[i], p.edges());
					if (!edges_in_class_g(joined)) continue;
					auto first = solve(joined);
					if (!first || !std::holds_alternative<Decomposition>(*first)) continue;
					Decomposition out = std::get<Decomposition>(*first);
					bool ok = true;
					for (size_t j = 0; j < parts.size() && ok; ++j) {
						if (j == i) continue;
						if (!edges_in_class_g(parts[j])) {
							ok = false;
							break;
						}
						auto other = solve(parts[j]);
						if (!other || !std::holds_alternative<Decomposition>(*other)) {
							ok = false;
							break;
						}
						for (const Walk& e : std::get<Decomposition>(*other).elements) out.elements.push_back(e);
					}
					if (ok) return TreeResult{out};
				}
			}
		}
		return std::nullopt;
	}

	std::map<EdgeList, std::optional<TreeResult>> memo_;
};


// ---------------------------------------------------------------- cycles

inline constexpr int kCycleCap = 4000;
inline constexpr int kCyclesTried = 48;

// simple cycles, shortest first and then by vertex sequence; each listed once,
// starting at its smallest vertex with the second vertex below the last
std::vector<Walk> cycles_by_length(const EdgeList& edges) {
	Graph g = graph_from_edges(edges);
	std::vector<Walk> out;
	std::vector<Vertex> stack;
	std::vector<char> on(static_cast<size_t>(g.vertex_count()), 0);
	auto dfs = [&](auto&& self, Vertex s, Vertex cur) -> void {
		if (static_cast<int>(out.size()) >= kCycleCap) return;
		for (Vertex x : g.neighbors(cur)) {
			if (x == s && stack.size() >= 3 && stack[1] < stack.back()) out.push_back(Walk::cycle(stack));
			if (x <= s || on[static_cast<size_t>(x)]) continue;
			on[static_cast<size_t>(x)] = 1;
			stack.push_back(x);
			self(self, s, x);
			stack.pop_back();
			on[static_cast<size_t>(x)] = 0;
		}
	};
	for (Vertex s : edge_vertices(edges)) {
		stack = {s};
		on[static_cast<size_t>(s)] = 1;
		dfs(dfs, s, s);
		on[static_cast<size_t>(s)] = 0;
	}
	std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
		return std::make_pair(a.length(), a.vertices) < std::make_pair(b.length(), b.vertices);
	});
	return out;
}

struct Outcome {
	std::optional<Decomposition> decomposition;
	std::optional<HangingSquareCertificate> certificate;
	std::vector<std::string> trace;
};

void append(Decomposition& into, const Decomposition& from) {
	into.elements.insert(into.elements.end(), from.elements.begin(), from.elements.end());
}

std::vector<Walk> squares_of(const HangingSquareCertificate& cert) {
	std::vector<Walk> out;
	for (const Bunch& b : cert.bunches)
		for (const Walk& q : b.squares) out.push_back(q);
	return out;
}

// last building paths over every rerooting of the sequence, deduplicated
std::vector<BuildingSequence> sequences_by_last_path(const BuildingSequence& seq) {
	std::vector<BuildingSequence> out;
	std::set<std::vector<Vertex>> seen;
	for (const Walk& p : brrb_paths(seq.edges())) {
		BuildingSequence re = reroot_sequence(seq, p);
		if (re.steps.empty() || !seen.insert(re.steps.back().vertices).second) continue;
		out.push_back(re);
	}
	return out;
}

class GeneralSolver {
public:
	Outcome solve(const EdgeList& edges) {
		auto it = memo_.find(edges);
		if (it != memo_.end()) return it->second;
		memo_[edges] = Outcome{};
		Outcome r = attempt(edges);
		memo_[edges] = r;
		return r;
	}

private:
	Outcome attempt(const EdgeList& edges) {
		Subgraph sub = edge_subgraph(edges);
		if (is_tree(sub.graph)) {
			auto t = trees_.solve(edges);
			if (!t) return {};
			if (auto* d = std::get_if<Decomposition>(&*t)) return {*d, std::nullopt, {"tree"}};
			return {std::nullopt, HangingSquareCertificate{std::get<BuildingSequence>(*t), {}, {}}, {"skeleton"}};
		}
		if (auto cert = find_hs_certificate(edges)) return {std::nullopt, *cert, {"hanging-square"}};
		std::vector<Walk> cycles = cycles_by_length(edges);
		int tried = 0;
		for (const Walk& c : cycles) {
			if (++tried > kCyclesTried) break;
			if (auto r = around_cycle(edges, c)) return *r;
		}
		return {};
	}

	std::optional<Outcome> around_cycle(const EdgeList& edges, const Walk& c) {
		EdgeList rest = edge_difference(edges, sorted_edges(c.edges()));
		std::vector<EdgeList> parts = edge_components(rest);
		Decomposition done{{c}, 4};
		std::vector<std::pair<EdgeList, HangingSquareCertificate>> hanging;
		std::vector<std::pair<EdgeList, Decomposition>> solved;
		for (const EdgeList& part : parts) {
			if (!edges_in_class_g(part)) return std::nullopt;
			Outcome o = solve(part);
			if (o.decomposition) solved.emplace_back(part, *o.decomposition);
			else if (o.certificate) hanging.emplace_back(part, *o.certificate);
			else return std::nullopt;
		}
		Decomposition others{{}, 4};
		for (const auto& [part, d] : solved) append(others, d);

		if (hanging.empty()) {
			append(done, others);
			return Outcome{done, std::nullopt, {"cycle-removal"}};
		}
		if (hanging.size() == 1) {
			if (auto m = merge_cycle(hanging[0].second, c)) {
				append(m->decomposition, others);
				return Outcome{m->decomposition, std::nullopt, {"cycle-removal", m->trace}};
			}
			// C is a square of H' = G - E(K) for a solved component K
			for (const auto& [part, d] : solved)
				if (auto m = merge_into_rest(edges, part, d)) return m;
		}
		if (auto r = remove_hanging_element(edges, hanging)) return r;
		if (auto r = three_path_ring(c, hanging, others)) return r;
		return std::nullopt;
	}

	struct Merged {
		Decomposition decomposition;
		std::string trace;
	};

	std::optional<Merged> run_merge(MergeCase mc) {
		if (!check_merge_preconditions(mc).ok) return std::nullopt;
		try {
			MergeResult r = lemma_merge_detailed(mc);
			return Merged{r.decomposition, merge_kind_name(mc.kind) + ":" + r.route};
		} catch (const error&) {
			return std::nullopt;
		}
	}

	std::optional<Merged> merge_cycle(const HangingSquareCertificate& h, const Walk& c) {
		MergeCase mc;
		mc.host = h;
		mc.attached = c;
		if (c.length() >= 5) {
			mc.kind = MergeKind::hs_long_cycle;
			if (auto m = run_merge(mc)) return m;
		}
		for (const Walk& q : squares_of(h)) {
			mc.square = q;
			mc.kind = MergeKind::hs_square_cycle;
			if (auto m = run_merge(mc)) return m;
			mc.kind = MergeKind::hs_two_squares;
			if (auto m = run_merge(mc)) return m;
		}
		if (h.bunches.empty() && c.length() == 4) {
			MergeCase sk;
			sk.kind = MergeKind::skeleton_last_path_cycle;
			sk.attached = c;
			for (const BuildingSequence& seq : sequences_by_last_path(h.skeleton)) {
				sk.skeleton = seq;
				if (auto m = run_merge(sk)) return m;
			}
		}
		return std::nullopt;
	}

	// G = H' + K with H' hanging-square and K solved: merge one element D of K
	// that meets H' into H', keep the rest of K.
	std::optional<Outcome> merge_into_rest(const EdgeList& edges, const EdgeList& k, const Decomposition& dk) {
		EdgeList hp = edge_difference(edges, k);
		auto cert = find_hs_certificate(hp);
		if (!cert) return std::nullopt;
		std::vector<Vertex> hv = edge_vertices(hp);
		for (size_t i = 0; i < dk.elements.size(); ++i) {
			const Walk& d = dk.elements[i];
			bool touches = std::any_of(d.vertices.begin(), d.vertices.end(),
			                           [&](Vertex v) { return std::binary_search(hv.begin(), hv.end(), v); });
			if (!touches) continue;
			MergeCase mc;
			mc.host = *cert;
			mc.attached = d;
			for (const Walk& q : squares_of(*cert)) {
				mc.square = q;
				mc.kind = d.is_cycle() ? MergeKind::hs_square_cycle : MergeKind::hs_short_path;
				auto m = run_merge(mc);
				if (!m) continue;
				for (size_t j = 0; j < dk.elements.size(); ++j)
					if (j != i) m->decomposition.elements.push_back(dk.elements[j]);
				return Outcome{m->decomposition, std::nullopt, {"element-merge", m->trace}};
			}
		}
		return std::nullopt;
	}

	// A building path or square of a hanging component whose removal leaves G
	// connected and decomposable.
	std::optional<Outcome> remove_hanging_element(const EdgeList& edges, const std::vector<std::pair<EdgeList, HangingSquareCertificate>>& hanging) {
		for (const auto& [part, cert] : hanging) {
			std::vector<Walk> candidates = squares_of(cert);
			for (const BuildingSequence& seq : sequences_by_last_path(cert.skeleton)) candidates.push_back(seq.steps.back().walk());
			for (const Walk& x : candidates) {
				EdgeList rest = edge_difference(edges, sorted_edges(x.edges()));
				if (edge_components(rest).size() != 1 || !edges_in_class_g(rest)) continue;
				Outcome o = solve(rest);
				if (!o.decomposition) continue;
				Decomposition d = *o.decomposition;
				d.elements.push_back(x);
				return Outcome{d, std::nullopt, {x.is_cycle() ? "square-removal" : "path-removal"}};
			}
		}
		return std::nullopt;
	}

	// Every hanging component is a 3-path meeting C in one vertex: walk around C
	// and join the long leg at x_i, the arc to x_{i+1} and the short leg there.
	std::optional<Outcome> three_path_ring(const Walk& c, const std::vector<std::pair<EdgeList, HangingSquareCertificate>>& hanging, const Decomposition& others) {
		if (hanging.size() < 2) return std::nullopt;
		std::map<Vertex, std::vector<Vertex>> path_at;
		for (const auto& [part, cert] : hanging) {
			if (!cert.bunches.empty() || !cert.skeleton.steps.empty()) return std::nullopt;
			const std::vector<Vertex>& p = cert.skeleton.start;
			int hits = 0;
			for (Vertex v : p)
				if (c.contains(v)) {
					++hits;
					path_at[v] = p;
				}
			if (hits != 1) return std::nullopt;
		}
		if (path_at.size() != hanging.size()) return std::nullopt;
		std::vector<size_t> idx;
		for (size_t i = 0; i < c.vertices.size(); ++i)
			if (path_at.count(c.vertices[i])) idx.push_back(i);
		auto legs = [&](Vertex x) {
			const std::vector<Vertex>& p = path_at[x];
			auto at = std::find(p.begin(), p.end(), x);
			std::vector<Vertex> a(p.begin(), at + 1); // ends at x
			std::vector<Vertex> b(at, p.end());       // starts at x
			std::vector<Vertex> longest = a, shortest = b;
			if (a.size() < b.size()) {
				longest.assign(b.rbegin(), b.rend());
				shortest.assign(a.rbegin(), a.rend());
			}
			return std::make_pair(longest, shortest); // longest ends at x, shortest starts at x
		};
		Decomposition d = others;
		size_t t = idx.size(), n = c.vertices.size();
		for (size_t i = 0; i < t; ++i) {
			size_t from = idx[i], to = idx[(i + 1) % t];
			auto [l, s0] = legs(c.vertices[from]);
			auto [l1, s] = legs(c.vertices[to]);
			std::vector<Vertex> pv = l;
			for (size_t k = (from + 1) % n;; k = (k + 1) % n) {
				pv.push_back(c.vertices[k]);
				if (k == to) break;
			}
			pv.insert(pv.end(), s.begin() + 1, s.end());
			d.elements.push_back(Walk::path(pv));
		}
		return Outcome{d, std::nullopt, {"three-path-ring"}};
	}

	TreeSolver trees_;
	std::map<EdgeList, Outcome> memo_;
};

} // namespace

std::string provenance_name(Provenance p) { return p == Provenance::constructive ? "constructive" : "oracle-fallback"; }

TreeResult decompose_tree(const Graph& t) {
	if (!is_tree(t)) throw not_a_tree("decompose_tree expects a tree");
	if (!in_class_g(t)) throw not_in_class_g("tree is not in class G");
	TreeSolver solver;
	auto r = solver.solve(sorted_edges(t.edges()));
	if (!r) throw merge_exhausted("no constructive reduction applies to this tree");
	return *r;
}

DichotomyResult decompose_4pc(const Graph& g) {
	if (!in_class_g(g)) throw not_in_class_g("graph is not connected, triangle-free with odd distance >= 3 and an edge");
	GeneralSolver solver;
	EdgeList edges = sorted_edges(g.edges());
	Outcome o = solver.solve(edges);
	DichotomyResult r;
	r.trace = o.trace;
	if (o.decomposition && validate_decomposition(g, *o.decomposition).ok) {
		r.decomposition = o.decomposition;
		return r;
	}
	if (o.certificate && verify_hs_certificate(g, *o.certificate).ok) {
		r.certificate = o.certificate;
		return r;
	}
	r.provenance = Provenance::oracle_fallback;
	r.trace = {"oracle"};
	if (auto d = decompose_4pc_exact(g, {true})) {
		r.decomposition = *d;
		return r;
	}
	if (auto cert = recognize_hanging_square(g)) {
		r.certificate = *cert;
		return r;
	}
	throw dichotomy_violation("neither a 4-pc decomposition nor a hanging-square certificate was found");
}

} // namespace pcd
