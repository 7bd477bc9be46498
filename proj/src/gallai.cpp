#include "pcd/gallai.hpp"

#include "pcd/decomposer.hpp"
#include "pcd/hanging_square.hpp"
#include "pcd/merge.hpp"
#include "pcd/oracle.hpp"

namespace pcd {

namespace {

bool share_vertex(const Walk& a, const Walk& b) {
	return std::any_of(a.vertices.begin(), a.vertices.end(), [&](Vertex v) { return b.contains(v); });
}

// cycle c cut into two paths at c[0] and c[len/2]
std::pair<Walk, Walk> cut_cycle(const Walk& c) {
	size_t half = c.vertices.size() / 2;
	std::vector<Vertex> a(c.vertices.begin(), c.vertices.begin() + static_cast<long>(half) + 1);
	std::vector<Vertex> b(c.vertices.begin() + static_cast<long>(half), c.vertices.end());
	b.push_back(c.vertices.front());
	return {Walk::path(a), Walk::path(b)};
}

bool is_cycle_graph(const Graph& g) {
	if (!is_connected(g)) return false;
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (g.degree(v) != 2) return false;
	return true;
}

// the cycle of a cycle graph, from vertex 0 towards its smaller neighbour
Walk cycle_of(const Graph& g) {
	std::vector<Vertex> vs{0};
	Vertex prev = 0, cur = g.neighbors(0).front();
	while (cur != 0) {
		vs.push_back(cur);
		Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
		prev = cur;
		cur = next;
	}
	return Walk::cycle(vs);
}

std::optional<Decomposition> merged(MergeKind kind, const Walk& base, const Walk& other) {
	MergeCase mc;
	mc.kind = kind;
	mc.base = base;
	mc.attached = other;
	if (!check_merge_preconditions(mc).ok) return std::nullopt;
	try {
		return lemma_merge(mc);
	} catch (const error&) {
		return std::nullopt;
	}
}

// Replace the cycle at index i and element j by the two paths of `d`.
void replace_pair(std::vector<Walk>& elements, size_t i, size_t j, const Decomposition& d) {
	elements[i] = d.elements.at(0);
	elements[j] = d.elements.at(1);
}

bool eliminate_one_cycle(std::vector<Walk>& elements) {
	for (size_t i = 0; i < elements.size(); ++i) {
		if (!elements[i].is_cycle()) continue;
		for (size_t j = 0; j < elements.size(); ++j)
			if (j != i && elements[j].is_cycle() && share_vertex(elements[i], elements[j]))
				if (auto d = merged(MergeKind::two_cycles, elements[i], elements[j])) {
					replace_pair(elements, i, j, *d);
					return true;
				}
		for (size_t j = 0; j < elements.size(); ++j)
			if (j != i && !elements[j].is_cycle() && share_vertex(elements[i], elements[j]))
				if (auto d = merged(MergeKind::cycle_path, elements[i], elements[j])) {
					replace_pair(elements, i, j, *d);
					return true;
				}
		// paths longer than 7: the same split search without the length cap
		for (size_t j = 0; j < elements.size(); ++j)
			if (j != i && !elements[j].is_cycle() && share_vertex(elements[i], elements[j]))
				if (auto d = split_into_two_paths(edge_union(elements[i].edges(), elements[j].edges()))) {
					replace_pair(elements, i, j, *d);
					return true;
				}
	}
	return false;
}

} // namespace

std::string gallai_route_name(GallaiRoute r) {
	switch (r) {
	case GallaiRoute::direct: return "direct";
	case GallaiRoute::hs_fallback: return "hs-fallback";
	case GallaiRoute::cycle_graph: return "cycle-graph";
	}
	return "?";
}

GallaiResult gallai_decomposition(const Graph& g) {
	if (!in_class_g(g)) throw not_in_class_g("graph is not connected, triangle-free with odd distance >= 3 and an edge");
	GallaiResult r;
	r.bound = (g.vertex_count() + 1) / 2;
	if (g.edge_count() > 4 * r.bound)
		throw edge_bound_violated("graph has " + std::to_string(g.edge_count()) + " edges, above 4 ceil(n/2) = " + std::to_string(4 * r.bound));

	if (is_cycle_graph(g)) {
		auto [a, b] = cut_cycle(cycle_of(g));
		r.paths = Decomposition{{a, b}, 1};
		r.route = GallaiRoute::cycle_graph;
	} else if (recognize_hanging_square(g)) {
		r.paths = min_path_decomposition_exact(g).paths;
		r.route = GallaiRoute::hs_fallback;
	} else {
		DichotomyResult d = decompose_4pc(g);
		std::vector<Walk> elements;
		for (const Walk& w : d.decomposition->elements) {
			if (w.is_cycle() && w.length() >= 8) {
				auto [a, b] = cut_cycle(w);
				elements.push_back(a);
				elements.push_back(b);
			} else {
				elements.push_back(w);
			}
		}
		auto has_cycle = [&] { return std::any_of(elements.begin(), elements.end(), [](const Walk& w) { return w.is_cycle(); }); };
		while (has_cycle()) {
			if (!eliminate_one_cycle(elements)) throw merge_exhausted("a remaining cycle has no mergeable neighbour");
			++r.merges;
		}
		r.paths = Decomposition{elements, 1};
		r.route = GallaiRoute::direct;
	}
	r.within_bound = static_cast<int>(r.paths.elements.size()) <= r.bound;
	return r;
}

} // namespace pcd
