#include "pcd/enumerate.hpp"

#include "pcd/builders.hpp"

#include <map>
#include <set>

namespace pcd {

namespace {

// Pairs are read column by column, (0,1), (0,2), (1,2), (0,3), ... so that
// every placed vertex fixes a prefix of the code; that lets the search prune.
class Canonizer {
public:
	explicit Canonizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
		total_bits_ = n_ * (n_ - 1) / 2;
		std::vector<std::pair<std::vector<int>, Vertex>> keyed;
		for (Vertex v = 0; v < n_; ++v) {
			std::vector<int> key{g.degree(v)};
			std::vector<int> nd;
			for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
			std::sort(nd.begin(), nd.end());
			key.insert(key.end(), nd.begin(), nd.end());
			keyed.push_back({std::move(key), v});
		}
		std::sort(keyed.begin(), keyed.end());
		class_of_position_.resize(static_cast<size_t>(n_));
		int cls = -1;
		for (int i = 0; i < n_; ++i) {
			if (i == 0 || keyed[static_cast<size_t>(i)].first != keyed[static_cast<size_t>(i - 1)].first) {
				++cls;
				members_.emplace_back();
			}
			class_of_position_[static_cast<size_t>(i)] = cls;
			members_.back().push_back(keyed[static_cast<size_t>(i)].second);
		}
		used_.assign(static_cast<size_t>(n_), 0);
	}

	CanonicalForm run() {
		current_.clear();
		dfs(0, 0, 0);
		return {n_, best_code_, best_order_};
	}

private:
	void dfs(int pos, std::uint64_t prefix, int bits) {
		if (have_best_) {
			std::uint64_t best_prefix = bits == 0 ? 0 : best_code_ >> (total_bits_ - bits);
			if (prefix > best_prefix) return;
			if (pos == n_ && prefix == best_code_) return;
		}
		if (pos == n_) {
			best_code_ = prefix;
			best_order_ = current_;
			have_best_ = true;
			return;
		}
		for (Vertex v : members_[static_cast<size_t>(class_of_position_[static_cast<size_t>(pos)])]) {
			if (used_[static_cast<size_t>(v)]) continue;
			std::uint64_t next = prefix;
			for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.has_edge(current_[static_cast<size_t>(i)], v) ? 1u : 0u);
			used_[static_cast<size_t>(v)] = 1;
			current_.push_back(v);
			dfs(pos + 1, next, bits + pos);
			current_.pop_back();
			used_[static_cast<size_t>(v)] = 0;
		}
	}

	const Graph& g_;
	int n_;
	int total_bits_ = 0;
	std::vector<int> class_of_position_;
	std::vector<std::vector<Vertex>> members_;
	std::vector<char> used_;
	std::vector<Vertex> current_;
	std::uint64_t best_code_ = 0;
	std::vector<Vertex> best_order_;
	bool have_best_ = false;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
	if (g.vertex_count() > kCanonicalVertexLimit)
		throw too_large("canonical form supports at most " + std::to_string(kCanonicalVertexLimit) + " vertices");
	return Canonizer(g).run();
}

namespace {

Graph relabel(const Graph& g, const CanonicalForm& cf) {
	std::vector<Vertex> position(static_cast<size_t>(g.vertex_count()));
	for (size_t i = 0; i < cf.order.size(); ++i) position[static_cast<size_t>(cf.order[i])] = static_cast<Vertex>(i);
	EdgeList es;
	for (const Edge& e : g.edges()) es.emplace_back(position[static_cast<size_t>(e.u)], position[static_cast<size_t>(e.v)]);
	return Graph(g.vertex_count(), es);
}

} // namespace

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g)); }

std::vector<Graph> enumerate_connected_triangle_free(int n) {
	if (n > kEnumerateVertexLimit) throw too_large("enumeration supports at most " + std::to_string(kEnumerateVertexLimit) + " vertices");
	if (n <= 0) return {};
	std::vector<Graph> level{Graph(1)};
	for (int k = 1; k < n; ++k) {
		std::map<std::uint64_t, Graph> next;
		for (const Graph& g : level) {
			// the new vertex k sees a non-empty independent set of g
			for (std::uint32_t s = 1; s < (1u << k); ++s) {
				bool independent = true;
				for (const Edge& e : g.edges())
					if ((s >> e.u & 1) && (s >> e.v & 1)) {
						independent = false;
						break;
					}
				if (!independent) continue;
				EdgeList es = g.edges();
				for (int v = 0; v < k; ++v)
					if (s >> v & 1) es.emplace_back(v, k);
				Graph raw(k + 1, es);
				CanonicalForm cf = canonical_form(raw);
				if (!next.count(cf.code)) next.emplace(cf.code, relabel(raw, cf));
			}
		}
		level.clear();
		for (auto& [code, g] : next) level.push_back(std::move(g));
	}
	return level;
}

std::vector<Graph> enumerate_class_g(int n_max) {
	if (n_max > kEnumerateVertexLimit) throw too_large("enumeration supports at most " + std::to_string(kEnumerateVertexLimit) + " vertices");
	std::vector<std::tuple<int, int, std::uint64_t, Graph>> found;
	for (int n = 1; n <= n_max; ++n)
		for (Graph& g : enumerate_connected_triangle_free(n))
			if (in_class_g(g)) {
				std::uint64_t code = canonical_form(g).code;
				found.emplace_back(n, g.edge_count(), code, std::move(g));
			}
	std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
		return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) < std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
	});
	std::vector<Graph> out;
	for (auto& f : found) out.push_back(std::move(std::get<3>(f)));
	return out;
}

// ---------------------------------------------------------------- trees

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
	std::vector<std::string> kids;
	for (Vertex w : t.neighbors(v))
		if (w != parent) kids.push_back(rooted_code(t, w, v));
	std::sort(kids.begin(), kids.end());
	std::string out = "(";
	for (const auto& k : kids) out += k;
	return out + ")";
}

} // namespace

std::string tree_canonical_string(const Graph& t) {
	if (!is_tree(t)) throw not_a_tree("graph is not a tree");
	int n = t.vertex_count();
	std::vector<int> deg(static_cast<size_t>(n));
	std::vector<Vertex> layer;
	for (Vertex v = 0; v < n; ++v) {
		deg[static_cast<size_t>(v)] = t.degree(v);
		if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
	}
	int remaining = n;
	while (remaining > 2) {
		remaining -= static_cast<int>(layer.size());
		std::vector<Vertex> next;
		for (Vertex v : layer)
			for (Vertex w : t.neighbors(v))
				if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
		layer = next;
	}
	std::string best;
	for (Vertex c : layer) {
		std::string code = rooted_code(t, c, -1);
		if (best.empty() || code < best) best = code;
	}
	return best;
}

std::vector<Graph> enumerate_trees(int max_edges) {
	std::vector<Graph> out;
	std::vector<Graph> level{Graph(2, {{0, 1}})};
	for (int m = 1; m <= max_edges; ++m) {
		for (const Graph& t : level) out.push_back(t);
		if (m == max_edges) break;
		std::map<std::string, Graph> next;
		for (const Graph& t : level)
			for (Vertex v = 0; v < t.vertex_count(); ++v) {
				EdgeList es = t.edges();
				es.emplace_back(v, t.vertex_count());
				Graph bigger(t.vertex_count() + 1, es);
				next.try_emplace(tree_canonical_string(bigger), std::move(bigger));
			}
		level.clear();
		for (auto& [code, t] : next) level.push_back(std::move(t));
	}
	return out;
}

std::vector<BuildingSequence> enumerate_skeletons(int max_edges) {
	std::vector<BuildingSequence> out;
	if (max_edges < 3) return out;
	std::vector<BuildingSequence> layer{BuildingSequence{{0, 1, 2, 3}, {}}};
	std::set<std::string> seen{tree_canonical_string(skeleton_graph(layer[0]))};
	while (!layer.empty()) {
		std::vector<BuildingSequence> next;
		for (const BuildingSequence& s : layer) {
			out.push_back(s);
			int m = static_cast<int>(s.edges().size());
			std::vector<Vertex> vs = s.vertices();
			for (int len : {4, 6}) {
				if (m + len > max_edges) continue;
				for (Vertex j : vs) {
					BuildingPath bp;
					Vertex f = static_cast<Vertex>(vs.size());
					for (int i = 0; i <= len; ++i) bp.vertices.push_back(i == len / 2 ? j : f++);
					BuildingSequence c = s;
					c.steps.push_back(bp);
					if (!check_sequence_structure(c).ok) continue;
					if (seen.insert(tree_canonical_string(skeleton_graph(c))).second) next.push_back(c);
				}
			}
		}
		layer = std::move(next);
	}
	return out;
}

} // namespace pcd
