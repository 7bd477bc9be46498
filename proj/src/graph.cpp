#include "pcd/graph.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace pcd {

Graph::Graph(int vertex_count) : adjacency_(static_cast<size_t>(std::max(vertex_count, 0))) {}

Graph::Graph(int vertex_count, EdgeList edges) : Graph(vertex_count) {
	for (const Edge& e : edges) {
		if (e.u == e.v) throw self_loop("self-loop at vertex " + std::to_string(e.u));
		if (e.u < 0 || e.v >= vertex_count)
			throw invalid_graph("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") out of range");
	}
	std::sort(edges.begin(), edges.end());
	auto dup = std::adjacent_find(edges.begin(), edges.end());
	if (dup != edges.end())
		throw duplicate_edge("duplicate edge (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");
	for (const Edge& e : edges) {
		adjacency_[static_cast<size_t>(e.u)].push_back(e.v);
		adjacency_[static_cast<size_t>(e.v)].push_back(e.u);
	}
	for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
	edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }

int Graph::edge_id(Vertex a, Vertex b) const {
	Edge e(a, b);
	auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
	if (it == edges_.end() || *it != e) return -1;
	return static_cast<int>(it - edges_.begin());
}

Graph graph_from_edges(const EdgeList& edges, int min_vertex_count) {
	int n = min_vertex_count;
	for (const Edge& e : edges) n = std::max(n, e.v + 1);
	return Graph(n, edges);
}

// ---------------------------------------------------------------- walks

int Walk::length() const noexcept {
	if (vertices.empty()) return 0;
	return is_cycle() ? static_cast<int>(vertices.size()) : static_cast<int>(vertices.size()) - 1;
}

EdgeList Walk::edges() const {
	EdgeList out;
	for (size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
	if (is_cycle() && vertices.size() >= 2) out.emplace_back(vertices.back(), vertices.front());
	return out;
}

bool Walk::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

bool is_simple(const Walk& w) {
	if (w.vertices.empty()) return false;
	std::vector<Vertex> s = w.vertices;
	std::sort(s.begin(), s.end());
	if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
	return !w.is_cycle() || w.vertices.size() >= 3;
}

Walk reversed(const Walk& w) {
	Walk r = w;
	std::reverse(r.vertices.begin(), r.vertices.end());
	return r;
}

Walk oriented_from(const Walk& p, Vertex first) {
	if (p.front() == first) return p;
	if (p.back() == first) return reversed(p);
	throw vertex_not_on_walk("vertex " + std::to_string(first) + " is not an end of the path");
}

// ---------------------------------------------------------------- properties

bool is_connected(const Graph& g) {
	int n = g.vertex_count();
	if (n <= 1) return true;
	std::vector<int> d = bfs_distances(g, 0);
	return std::none_of(d.begin(), d.end(), [](int x) { return x == kInfinity; });
}

bool is_triangle_free(const Graph& g) {
	for (const Edge& e : g.edges()) {
		const auto& a = g.neighbors(e.u);
		const auto& b = g.neighbors(e.v);
		// sorted neighbour lists: any common neighbour closes a triangle
		size_t i = 0, j = 0;
		while (i < a.size() && j < b.size()) {
			if (a[i] == b[j]) return false;
			if (a[i] < b[j]) ++i;
			else ++j;
		}
	}
	return true;
}

bool is_acyclic(const Graph& g) {
	std::vector<int> comp(static_cast<size_t>(g.vertex_count()));
	std::iota(comp.begin(), comp.end(), 0);
	auto find = [&](int x) {
		while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
		return x;
	};
	for (const Edge& e : g.edges()) {
		int a = find(e.u), b = find(e.v);
		if (a == b) return false;
		comp[static_cast<size_t>(a)] = b;
	}
	return true;
}

bool is_tree(const Graph& g) {
	return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
	std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInfinity);
	std::queue<Vertex> q;
	dist[static_cast<size_t>(source)] = 0;
	q.push(source);
	while (!q.empty()) {
		Vertex x = q.front();
		q.pop();
		for (Vertex y : g.neighbors(x)) {
			if (dist[static_cast<size_t>(y)] != kInfinity) continue;
			dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
			q.push(y);
		}
	}
	return dist;
}

int odd_distance(const Graph& g) {
	int best = kInfinity;
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		if (g.degree(v) % 2 == 0) continue;
		std::vector<int> d = bfs_distances(g, v);
		for (Vertex w = v + 1; w < g.vertex_count(); ++w)
			if (g.degree(w) % 2 == 1) best = std::min(best, d[static_cast<size_t>(w)]);
	}
	return best;
}

ClassGReport class_g_report(const Graph& g) {
	ClassGReport r;
	r.connected = is_connected(g);
	r.triangle_free = is_triangle_free(g);
	r.odd_distance = odd_distance(g);
	r.member = r.connected && r.triangle_free && r.odd_distance >= 3 && g.edge_count() >= 1;
	return r;
}

ParityColoring parity_coloring(const Graph& t) {
	if (!is_tree(t)) throw not_a_tree("graph is not a tree");
	ParityColoring c;
	c.color.resize(static_cast<size_t>(t.vertex_count()));
	for (Vertex v = 0; v < t.vertex_count(); ++v)
		c.color[static_cast<size_t>(v)] = t.degree(v) % 2 == 1 ? Color::black : Color::red;
	return c;
}

std::vector<Walk> brrb_paths(const Graph& t) {
	ParityColoring c = parity_coloring(t);
	std::vector<Walk> out;
	for (const Edge& mid : t.edges()) {
		if (c.is_black(mid.u) || c.is_black(mid.v)) continue;
		for (Vertex a : t.neighbors(mid.u)) {
			if (a == mid.v || !c.is_black(a)) continue;
			for (Vertex b : t.neighbors(mid.v)) {
				if (b == mid.u || b == a || !c.is_black(b)) continue;
				Walk p = Walk::path({a, mid.u, mid.v, b});
				if (p.front() > p.back()) p = reversed(p);
				out.push_back(std::move(p));
			}
		}
	}
	std::sort(out.begin(), out.end(), [](const Walk& x, const Walk& y) { return x.vertices < y.vertices; });
	return out;
}

bool is_brrb_path(const Graph& t, const Walk& p) {
	if (p.is_cycle() || p.vertices.size() != 4 || !is_simple(p)) return false;
	for (size_t i = 0; i < 4; ++i)
		if (p.vertices[i] < 0 || p.vertices[i] >= t.vertex_count()) return false;
	for (size_t i = 0; i + 1 < 4; ++i)
		if (!t.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
	auto odd = [&](size_t i) { return t.degree(p.vertices[i]) % 2 == 1; };
	return odd(0) && !odd(1) && !odd(2) && odd(3);
}

Verdict validate_decomposition(const Graph& g, const Decomposition& d) {
	Verdict verdict;
	std::vector<int> cover(static_cast<size_t>(g.edge_count()), 0);
	for (size_t i = 0; i < d.elements.size(); ++i) {
		const Walk& w = d.elements[i];
		std::string tag = "element " + std::to_string(i);
		if (!is_simple(w)) {
			verdict.fail(tag + " repeats a vertex or is degenerate");
			continue;
		}
		if (w.length() < d.min_length)
			verdict.fail(tag + " has length " + std::to_string(w.length()) + " < " + std::to_string(d.min_length));
		for (const Edge& e : w.edges()) {
			int id = (e.u >= 0 && e.v < g.vertex_count()) ? g.edge_id(e.u, e.v) : -1;
			if (id < 0) {
				verdict.fail(tag + " uses non-edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
				continue;
			}
			if (++cover[static_cast<size_t>(id)] == 2)
				verdict.fail("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") covered twice");
		}
	}
	for (size_t i = 0; i < cover.size(); ++i)
		if (cover[i] == 0) {
			const Edge& e = g.edges()[i];
			verdict.fail("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") not covered");
		}
	return verdict;
}

Walk subpath(const Walk& w, Vertex x, Vertex y, ArcSide side) {
	auto ix = std::find(w.vertices.begin(), w.vertices.end(), x);
	auto iy = std::find(w.vertices.begin(), w.vertices.end(), y);
	if (ix == w.vertices.end()) throw vertex_not_on_walk("vertex " + std::to_string(x) + " not on walk");
	if (iy == w.vertices.end()) throw vertex_not_on_walk("vertex " + std::to_string(y) + " not on walk");
	size_t i = static_cast<size_t>(ix - w.vertices.begin());
	size_t j = static_cast<size_t>(iy - w.vertices.begin());
	if (i == j) return Walk::path({x});
	if (!w.is_cycle()) {
		std::vector<Vertex> vs;
		if (i < j) vs.assign(w.vertices.begin() + static_cast<long>(i), w.vertices.begin() + static_cast<long>(j) + 1);
		else {
			vs.assign(w.vertices.begin() + static_cast<long>(j), w.vertices.begin() + static_cast<long>(i) + 1);
			std::reverse(vs.begin(), vs.end());
		}
		return Walk::path(std::move(vs));
	}
	size_t n = w.vertices.size();
	std::vector<Vertex> forward, backward;
	for (size_t k = i;; k = (k + 1) % n) {
		forward.push_back(w.vertices[k]);
		if (k == j) break;
	}
	for (size_t k = i;; k = (k + n - 1) % n) {
		backward.push_back(w.vertices[k]);
		if (k == j) break;
	}
	if (side == ArcSide::first) return Walk::path(std::move(forward));
	bool forward_shorter = forward.size() < backward.size();
	if (forward.size() == backward.size()) {
		// tie: lexicographically smaller sequence wins for both selectors
		return Walk::path(std::min(forward, backward));
	}
	bool pick_forward = side == ArcSide::shortest ? forward_shorter : !forward_shorter;
	return Walk::path(pick_forward ? std::move(forward) : std::move(backward));
}

// ---------------------------------------------------------------- edge sets

EdgeList sorted_edges(EdgeList edges) {
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	return edges;
}

EdgeList edge_union(const EdgeList& a, const EdgeList& b) {
	EdgeList sa = sorted_edges(a), sb = sorted_edges(b), out;
	std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
	return out;
}

EdgeList edge_difference(const EdgeList& a, const EdgeList& b) {
	EdgeList sa = sorted_edges(a), sb = sorted_edges(b), out;
	std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
	return out;
}

bool edges_disjoint(const EdgeList& a, const EdgeList& b) {
	EdgeList sa = sorted_edges(a), sb = sorted_edges(b), out;
	std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
	return out.empty();
}

std::vector<Vertex> edge_vertices(const EdgeList& edges) {
	std::vector<Vertex> vs;
	for (const Edge& e : edges) {
		vs.push_back(e.u);
		vs.push_back(e.v);
	}
	std::sort(vs.begin(), vs.end());
	vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
	return vs;
}

std::vector<EdgeList> edge_components(const EdgeList& edges) {
	std::map<Vertex, Vertex> parent;
	auto find = [&](Vertex x) {
		while (parent[x] != x) x = parent[x] = parent[parent[x]];
		return x;
	};
	for (const Edge& e : edges) {
		parent.try_emplace(e.u, e.u);
		parent.try_emplace(e.v, e.v);
	}
	for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
	std::map<Vertex, EdgeList> groups;
	for (const Edge& e : sorted_edges(edges)) groups[find(e.u)].push_back(e);
	std::vector<EdgeList> out;
	for (auto& [root, list] : groups) out.push_back(std::move(list));
	std::sort(out.begin(), out.end(), [](const EdgeList& a, const EdgeList& b) { return a.front() < b.front(); });
	return out;
}

Walk Subgraph::lift(const Walk& w) const {
	Walk out = w;
	for (Vertex& v : out.vertices) v = to_host.at(static_cast<size_t>(v));
	return out;
}

Decomposition Subgraph::lift(const Decomposition& d) const {
	Decomposition out = d;
	for (Walk& w : out.elements) w = lift(w);
	return out;
}

Subgraph edge_subgraph(const EdgeList& edges) {
	Subgraph s;
	s.to_host = edge_vertices(edges);
	EdgeList local;
	local.reserve(edges.size());
	auto index = [&](Vertex v) {
		return static_cast<Vertex>(std::lower_bound(s.to_host.begin(), s.to_host.end(), v) - s.to_host.begin());
	};
	for (const Edge& e : sorted_edges(edges)) local.emplace_back(index(e.u), index(e.v));
	s.graph = Graph(static_cast<int>(s.to_host.size()), std::move(local));
	return s;
}

} // namespace pcd
