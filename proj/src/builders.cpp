#include "pcd/builders.hpp"

namespace pcd {

Graph path_graph(int edges) {
	EdgeList es;
	for (int i = 0; i < edges; ++i) es.emplace_back(i, i + 1);
	return Graph(edges + 1, es);
}

Graph cycle_graph(int n) {
	EdgeList es;
	for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
	return Graph(n, es);
}

Graph star_graph(int leaves) {
	EdgeList es;
	for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
	return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
	EdgeList es;
	for (int i = 0; i < a; ++i)
		for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
	return Graph(a + b, es);
}

Graph petersen_graph() {
	EdgeList es;
	for (int i = 0; i < 5; ++i) {
		es.emplace_back(i, (i + 1) % 5);
		es.emplace_back(i, i + 5);
		es.emplace_back(5 + i, 5 + (i + 2) % 5);
	}
	return Graph(10, es);
}

Graph skeleton_graph(const BuildingSequence& seq) { return graph_from_edges(seq.edges()); }

} // namespace pcd
