#pragma once

// Brute-force reference implementations used to cross-check the library.

#include "pcd/graph.hpp"

#include <functional>
#include <map>
#include <random>

namespace testsupport {

using namespace pcd;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> es) {
	EdgeList list;
	for (auto [a, b] : es) list.emplace_back(a, b);
	return Graph(n, list);
}

// every sequence of four distinct vertices forming a path, each once up to reversal
inline std::vector<std::vector<Vertex>> all_three_paths(const Graph& g) {
	std::vector<std::vector<Vertex>> out;
	int n = g.vertex_count();
	for (int a = 0; a < n; ++a)
		for (int b : g.neighbors(a))
			for (int c : g.neighbors(b))
				for (int d : g.neighbors(c)) {
					if (c == a || d == b || d == a) continue;
					if (a < d) out.push_back({a, b, c, d});
				}
	std::sort(out.begin(), out.end());
	return out;
}

// true iff the edges form one path or one cycle of length >= min_length
inline bool is_path_or_cycle(const EdgeList& block, int min_length) {
	if (static_cast<int>(block.size()) < min_length) return false;
	std::map<Vertex, int> deg;
	for (const Edge& e : block) {
		++deg[e.u];
		++deg[e.v];
	}
	int ones = 0;
	for (auto [v, d] : deg) {
		if (d > 2) return false;
		if (d == 1) ++ones;
	}
	if (ones != 0 && ones != 2) return false;
	return edge_components(block).size() == 1;
}

// exhaustive search over all set partitions of the edge set (restricted growth strings)
inline bool brute_force_4pc(const Graph& g) {
	const EdgeList& es = g.edges();
	size_t m = es.size();
	if (m == 0) return true;
	std::vector<int> label(m, 0);
	std::function<bool(size_t, int)> rec = [&](size_t i, int blocks) -> bool {
		if (i == m) {
			std::vector<EdgeList> parts(static_cast<size_t>(blocks));
			for (size_t k = 0; k < m; ++k) parts[static_cast<size_t>(label[k])].push_back(es[k]);
			for (const EdgeList& p : parts)
				if (!is_path_or_cycle(p, 4)) return false;
			return true;
		}
		for (int b = 0; b <= blocks; ++b) {
			label[i] = b;
			if (rec(i + 1, std::max(blocks, b + 1))) return true;
		}
		return false;
	};
	return rec(0, 0);
}

// minimum number of blocks in a partition into paths (any length)
inline int brute_force_min_paths(const Graph& g) {
	const EdgeList& es = g.edges();
	size_t m = es.size();
	if (m == 0) return 0;
	std::vector<int> label(m, 0);
	int best = static_cast<int>(m);
	std::function<void(size_t, int)> rec = [&](size_t i, int blocks) {
		if (blocks >= best) return;
		if (i == m) {
			std::vector<EdgeList> parts(static_cast<size_t>(blocks));
			for (size_t k = 0; k < m; ++k) parts[static_cast<size_t>(label[k])].push_back(es[k]);
			for (const EdgeList& p : parts) {
				if (!is_path_or_cycle(p, 1)) return;
				std::map<Vertex, int> deg;
				for (const Edge& e : p) ++deg[e.u], ++deg[e.v];
				bool cycle = std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second == 2; });
				if (cycle) return;
			}
			best = blocks;
			return;
		}
		for (int b = 0; b <= blocks; ++b) {
			label[i] = b;
			rec(i + 1, std::max(blocks, b + 1));
		}
	};
	rec(0, 0);
	return best;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
	EdgeList es;
	for (const Edge& e : g.edges()) es.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
	return Graph(g.vertex_count(), es);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
	std::bernoulli_distribution coin(p);
	EdgeList es;
	for (int a = 0; a < n; ++a)
		for (int b = a + 1; b < n; ++b)
			if (coin(rng)) es.emplace_back(a, b);
	return Graph(n, es);
}

} // namespace testsupport
