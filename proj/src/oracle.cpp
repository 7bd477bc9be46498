#include "pcd/oracle.hpp"

#include <bit>
#include <climits>
#include <numeric>
#include <unordered_map>

namespace pcd {

namespace {

using Mask = std::uint64_t;

struct Candidate {
	bool cycle = false;
	std::vector<Vertex> vertices;
	Mask mask = 0;
	int length() const { return std::popcount(mask); }
};

class Search {
public:
	Search(const Graph& g, const SearchOptions& options) : g_(g), opt_(options) {
		ell_ = g.edge_count();
		full_ = ell_ == 64 ? ~Mask{0} : ((Mask{1} << ell_) - 1);
		incident_.resize(static_cast<size_t>(g.vertex_count()));
		for (int id = 0; id < ell_; ++id) {
			const Edge& e = g.edges()[static_cast<size_t>(id)];
			incident_[static_cast<size_t>(e.u)].push_back({e.v, id});
			incident_[static_cast<size_t>(e.v)].push_back({e.u, id});
		}
		used_.assign(static_cast<size_t>(g.vertex_count()), 0);
	}

	std::optional<Decomposition> run() {
		int budget = opt_.max_elements < 0 ? INT_MAX : opt_.max_elements;
		if (!rec(0, budget)) return std::nullopt;
		Decomposition d;
		d.min_length = opt_.min_length;
		d.elements = chosen_;
		return d;
	}

private:
	struct Arc {
		Vertex to;
		int id;
	};

	// connected pieces of the uncovered edges: prune pieces too short to host an
	// element, and compare the element lower bound with the remaining budget
	bool feasible_bound(Mask covered, int budget) const {
		std::vector<int> parent(static_cast<size_t>(g_.vertex_count()));
		std::iota(parent.begin(), parent.end(), 0);
		auto find = [&](int x) {
			while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
			return x;
		};
		std::vector<int> deg(static_cast<size_t>(g_.vertex_count()), 0);
		Mask open = full_ & ~covered;
		for (Mask m = open; m; m &= m - 1) {
			const Edge& e = g_.edges()[static_cast<size_t>(std::countr_zero(m))];
			++deg[static_cast<size_t>(e.u)];
			++deg[static_cast<size_t>(e.v)];
			parent[static_cast<size_t>(find(e.u))] = find(e.v);
		}
		std::vector<int> edges_in(static_cast<size_t>(g_.vertex_count()), 0), odd_in(static_cast<size_t>(g_.vertex_count()), 0);
		for (Mask m = open; m; m &= m - 1) ++edges_in[static_cast<size_t>(find(g_.edges()[static_cast<size_t>(std::countr_zero(m))].u))];
		for (Vertex v = 0; v < g_.vertex_count(); ++v)
			if (deg[static_cast<size_t>(v)] % 2 == 1) ++odd_in[static_cast<size_t>(find(v))];
		long bound = 0;
		for (Vertex r = 0; r < g_.vertex_count(); ++r) {
			int cnt = edges_in[static_cast<size_t>(r)];
			if (cnt == 0) continue;
			if (cnt < opt_.min_length) return false;
			int odd = odd_in[static_cast<size_t>(r)];
			bound += opt_.allow_cycles ? 1 : std::max(1, odd / 2);
		}
		return bound <= budget;
	}

	void extend_cycles(Vertex cur, Vertex target, Mask covered, Mask mask, std::vector<Vertex>& seq, std::vector<Candidate>& out) {
		for (const Arc& arc : incident_[static_cast<size_t>(cur)]) {
			if ((covered >> arc.id) & 1 || (mask >> arc.id) & 1) continue;
			if (arc.to == target) {
				int len = std::popcount(mask) + 1;
				if (len >= std::max(3, opt_.min_length)) out.push_back({true, seq, mask | (Mask{1} << arc.id)});
				continue;
			}
			if (used_[static_cast<size_t>(arc.to)]) continue;
			used_[static_cast<size_t>(arc.to)] = 1;
			seq.push_back(arc.to);
			extend_cycles(arc.to, target, covered, mask | (Mask{1} << arc.id), seq, out);
			seq.pop_back();
			used_[static_cast<size_t>(arc.to)] = 0;
		}
	}

	void extend_right(Vertex cur, Mask covered, Mask mask, std::vector<Vertex>& seq, std::vector<Candidate>& out) {
		if (std::popcount(mask) >= opt_.min_length) out.push_back({false, seq, mask});
		for (const Arc& arc : incident_[static_cast<size_t>(cur)]) {
			if ((covered >> arc.id) & 1 || (mask >> arc.id) & 1 || used_[static_cast<size_t>(arc.to)]) continue;
			used_[static_cast<size_t>(arc.to)] = 1;
			seq.push_back(arc.to);
			extend_right(arc.to, covered, mask | (Mask{1} << arc.id), seq, out);
			seq.pop_back();
			used_[static_cast<size_t>(arc.to)] = 0;
		}
	}

	std::vector<Candidate> candidates(Mask covered) {
		int anchor = std::countr_zero(full_ & ~covered);
		const Edge& e = g_.edges()[static_cast<size_t>(anchor)];
		Mask bit = Mask{1} << anchor;
		std::vector<Candidate> out;
		used_[static_cast<size_t>(e.u)] = used_[static_cast<size_t>(e.v)] = 1;
		if (opt_.allow_cycles) {
			std::vector<Vertex> seq{e.u, e.v};
			extend_cycles(e.v, e.u, covered, bit, seq, out);
		}
		if (opt_.allow_paths) {
			// left part grows from u, right part from v; the path reads left-reversed, u, v, right
			std::vector<Vertex> left{e.u};
			std::vector<Candidate> paths;
			extend_left_start(e, covered, bit, left, paths);
			out.insert(out.end(), paths.begin(), paths.end());
		}
		used_[static_cast<size_t>(e.u)] = used_[static_cast<size_t>(e.v)] = 0;
		std::sort(out.begin(), out.end(), [&](const Candidate& x, const Candidate& y) {
			if (x.cycle != y.cycle) return x.cycle;
			if (x.length() != y.length()) return opt_.longest_first ? x.length() > y.length() : x.length() < y.length();
			return x.vertices < y.vertices;
		});
		return out;
	}

	void extend_left_start(const Edge& e, Mask covered, Mask mask, std::vector<Vertex>& left, std::vector<Candidate>& out) {
		// left holds u followed by vertices moving away from u; right side starts at v
		std::vector<Vertex> seq(left.rbegin(), left.rend());
		seq.push_back(e.v);
		extend_right(e.v, covered, mask, seq, out);
		Vertex cur = left.back();
		for (const Arc& arc : incident_[static_cast<size_t>(cur)]) {
			if ((covered >> arc.id) & 1 || (mask >> arc.id) & 1 || used_[static_cast<size_t>(arc.to)]) continue;
			used_[static_cast<size_t>(arc.to)] = 1;
			left.push_back(arc.to);
			extend_left_start(e, covered, mask | (Mask{1} << arc.id), left, out);
			left.pop_back();
			used_[static_cast<size_t>(arc.to)] = 0;
		}
	}

	bool rec(Mask covered, int budget) {
		if (covered == full_) return true;
		if (budget <= 0) return false;
		if (opt_.memoize_failures) {
			auto it = failed_.find(covered);
			if (it != failed_.end() && it->second >= budget) return false;
		}
		if (!feasible_bound(covered, budget)) return false;
		for (const Candidate& c : candidates(covered)) {
			chosen_.push_back(c.cycle ? Walk::cycle(c.vertices) : Walk::path(c.vertices));
			if (rec(covered | c.mask, budget == INT_MAX ? budget : budget - 1)) return true;
			chosen_.pop_back();
		}
		if (opt_.memoize_failures) {
			int& slot = failed_[covered];
			slot = std::max(slot, budget);
		}
		return false;
	}

	const Graph& g_;
	SearchOptions opt_;
	int ell_ = 0;
	Mask full_ = 0;
	std::vector<std::vector<Arc>> incident_;
	std::vector<char> used_;
	std::vector<Walk> chosen_;
	std::unordered_map<Mask, int> failed_;
};

} // namespace

std::optional<Decomposition> search_decomposition(const Graph& g, const SearchOptions& options) {
	if (g.edge_count() > kOracleEdgeLimit)
		throw too_large("exact search supports at most " + std::to_string(kOracleEdgeLimit) + " edges, got " + std::to_string(g.edge_count()));
	if (g.edge_count() == 0) return Decomposition{{}, options.min_length};
	return Search(g, options).run();
}

std::optional<Decomposition> search_decomposition(const EdgeList& edges, const SearchOptions& options) {
	Subgraph s = edge_subgraph(edges);
	std::optional<Decomposition> d = search_decomposition(s.graph, options);
	if (!d) return std::nullopt;
	return s.lift(*d);
}

std::optional<Decomposition> decompose_4pc_exact(const Graph& g, const OracleOptions& options) {
	SearchOptions o;
	o.memoize_failures = options.memoize_failures;
	return search_decomposition(g, o);
}

std::optional<Decomposition> decompose_4pc_exact(const EdgeList& edges, const OracleOptions& options) {
	SearchOptions o;
	o.memoize_failures = options.memoize_failures;
	return search_decomposition(edges, o);
}

int path_count_lower_bound(const Graph& g) {
	int bound = 0;
	for (const EdgeList& comp : edge_components(g.edges())) {
		std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
		for (const Edge& e : comp) {
			++deg[static_cast<size_t>(e.u)];
			++deg[static_cast<size_t>(e.v)];
		}
		int odd = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d % 2 == 1; }));
		bound += std::max(1, odd / 2);
	}
	return bound;
}

MinPathResult min_path_decomposition_exact(const Graph& g) {
	if (g.edge_count() > kMinPathEdgeLimit)
		throw too_large("minimum path decomposition supports at most " + std::to_string(kMinPathEdgeLimit) + " edges, got " + std::to_string(g.edge_count()));
	if (g.edge_count() == 0) return {0, {{}, 1}};
	SearchOptions o;
	o.min_length = 1;
	o.allow_cycles = false;
	o.longest_first = true;
	o.memoize_failures = true;
	for (int k = path_count_lower_bound(g); k <= g.edge_count(); ++k) {
		o.max_elements = k;
		if (std::optional<Decomposition> d = search_decomposition(g, o)) return {k, *d};
	}
	throw std::logic_error("a single-edge path decomposition always exists");
}

} // namespace pcd
