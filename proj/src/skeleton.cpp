#include "pcd/skeleton.hpp"

#include <map>
#include <set>

namespace pcd {

EdgeList BuildingSequence::edges() const {
	EdgeList out = Walk::path(start).edges();
	for (const BuildingPath& bp : steps) {
		EdgeList e = bp.walk().edges();
		out.insert(out.end(), e.begin(), e.end());
	}
	return sorted_edges(std::move(out));
}

std::vector<Vertex> BuildingSequence::vertices() const { return edge_vertices(edges()); }

BuildingSequence BuildingSequence::prefix(size_t count) const {
	BuildingSequence out;
	out.start = start;
	out.steps.assign(steps.begin(), steps.begin() + static_cast<long>(std::min(count, steps.size())));
	return out;
}

PathSplit split_building_path(const BuildingPath& bp) {
	auto mid = bp.vertices.begin() + bp.joint_index();
	return {Walk::path({bp.vertices.begin(), mid + 1}), Walk::path({mid, bp.vertices.end()})};
}

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// prescribed colours along a building path
std::vector<Color> prescribed_colors(int length) {
	using enum Color;
	if (length == 3) return {black, red, red, black};
	if (length == 4) return {black, red, red, red, black};
	return {black, red, red, black, red, red, black};
}

Verdict replay(const BuildingSequence& seq, std::map<Vertex, Color>& colors) {
	Verdict verdict;
	auto assign = [&](Vertex v, Color c) {
		auto [it, fresh] = colors.emplace(v, c);
		if (!fresh && it->second != c) verdict.fail("vertex " + vname(v) + " needs both colours");
	};
	auto distinct = [](std::vector<Vertex> vs) {
		std::sort(vs.begin(), vs.end());
		return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
	};
	if (seq.start.size() != 4 || !distinct(seq.start)) {
		verdict.fail("start is not a 3-path on four distinct vertices");
		return verdict;
	}
	std::set<Vertex> present(seq.start.begin(), seq.start.end());
	std::vector<Color> c0 = prescribed_colors(3);
	for (size_t i = 0; i < 4; ++i) assign(seq.start[i], c0[i]);
	for (size_t s = 0; s < seq.steps.size(); ++s) {
		const BuildingPath& bp = seq.steps[s];
		std::string tag = "step " + std::to_string(s);
		int len = bp.length();
		if ((len != 4 && len != 6) || !distinct(bp.vertices)) {
			verdict.fail(tag + " is not a 4-path or 6-path on distinct vertices");
			return verdict;
		}
		if (!present.count(bp.joint())) verdict.fail(tag + " joint " + vname(bp.joint()) + " is not on the current tree");
		for (int i = 0; i <= len; ++i) {
			if (i != bp.joint_index() && present.count(bp.vertices[static_cast<size_t>(i)]))
				verdict.fail(tag + " reuses vertex " + vname(bp.vertices[static_cast<size_t>(i)]));
		}
		std::vector<Color> c = prescribed_colors(len);
		for (int i = 0; i <= len; ++i) assign(bp.vertices[static_cast<size_t>(i)], c[static_cast<size_t>(i)]);
		present.insert(bp.vertices.begin(), bp.vertices.end());
	}
	return verdict;
}

} // namespace

Verdict check_sequence_structure(const BuildingSequence& seq) {
	std::map<Vertex, Color> colors;
	return replay(seq, colors);
}

Verdict verify_building_sequence(const EdgeList& tree_edges, const BuildingSequence& seq) {
	std::map<Vertex, Color> colors;
	Verdict verdict = replay(seq, colors);
	if (!verdict) return verdict;
	EdgeList want = sorted_edges(tree_edges);
	if (want.size() != tree_edges.size()) verdict.fail("tree edge list has repeated edges");
	if (seq.edges() != want) {
		verdict.fail("replayed edge set differs from the tree");
		return verdict;
	}
	std::map<Vertex, int> degree;
	for (const Edge& e : want) {
		++degree[e.u];
		++degree[e.v];
	}
	for (const auto& [v, c] : colors) {
		bool odd = degree[v] % 2 == 1;
		if (odd != (c == Color::black)) verdict.fail("colour of vertex " + vname(v) + " disagrees with its degree parity");
	}
	return verdict;
}

Verdict verify_building_sequence(const Graph& t, const BuildingSequence& seq) {
	Verdict verdict = verify_building_sequence(t.edges(), seq);
	if (verdict && static_cast<int>(seq.vertices().size()) != t.vertex_count())
		verdict.fail("tree has vertices not covered by the sequence");
	return verdict;
}

// ---------------------------------------------------------------- recognition

namespace {

class Peeler {
public:
	explicit Peeler(const Graph& t) : t_(t), alive_(static_cast<size_t>(t.edge_count()), 1) {
		color_ = parity_coloring(t).color;
		degree_.resize(static_cast<size_t>(t.vertex_count()));
		for (Vertex v = 0; v < t.vertex_count(); ++v) degree_[static_cast<size_t>(v)] = t.degree(v);
	}

	std::optional<BuildingSequence> run() {
		if (!search(t_.edge_count())) return std::nullopt;
		BuildingSequence seq;
		seq.start = start_;
		seq.steps.assign(peeled_.rbegin(), peeled_.rend());
		return seq;
	}

private:
	struct Leg {
		std::vector<Vertex> vertices; // leaf .. joint
	};

	bool black(Vertex v) const { return color_[static_cast<size_t>(v)] == Color::black; }
	int deg(Vertex v) const { return degree_[static_cast<size_t>(v)]; }
	bool alive(Vertex a, Vertex b) const { return alive_[static_cast<size_t>(t_.edge_id(a, b))] != 0; }

	std::vector<Vertex> alive_neighbors(Vertex v) const {
		std::vector<Vertex> out;
		for (Vertex w : t_.neighbors(v))
			if (alive(v, w)) out.push_back(w);
		return out;
	}

	void set_path(const std::vector<Vertex>& vs, char value) {
		for (size_t i = 0; i + 1 < vs.size(); ++i) {
			alive_[static_cast<size_t>(t_.edge_id(vs[i], vs[i + 1]))] = value;
			int delta = value ? 1 : -1;
			degree_[static_cast<size_t>(vs[i])] += delta;
			degree_[static_cast<size_t>(vs[i + 1])] += delta;
		}
	}

	bool base_case() {
		std::vector<Vertex> ends;
		for (Vertex v = 0; v < t_.vertex_count(); ++v)
			if (deg(v) == 1) ends.push_back(v);
		if (ends.size() != 2) return false;
		std::vector<Vertex> path{ends[0]};
		Vertex prev = -1, cur = ends[0];
		while (path.size() < 4) {
			Vertex next = -1;
			for (Vertex w : alive_neighbors(cur))
				if (w != prev) next = w;
			if (next < 0) return false;
			prev = cur;
			cur = next;
			path.push_back(cur);
		}
		if (path.back() != ends[1]) return false;
		if (!black(path[0]) || black(path[1]) || black(path[2]) || !black(path[3])) return false;
		start_ = path;
		return true;
	}

	std::vector<Leg> legs() const {
		std::vector<Leg> out;
		for (Vertex leaf = 0; leaf < t_.vertex_count(); ++leaf) {
			if (deg(leaf) != 1 || !black(leaf)) continue;
			Leg leg{{leaf}};
			Vertex prev = -1, cur = leaf;
			while (leg.vertices.size() <= 4) {
				Vertex next = -1;
				for (Vertex w : alive_neighbors(cur))
					if (w != prev) next = w;
				if (next < 0) break;
				prev = cur;
				cur = next;
				leg.vertices.push_back(cur);
				if (deg(cur) != 2) break;
			}
			size_t len = leg.vertices.size() - 1;
			if (deg(cur) < 3 || (len != 2 && len != 3)) continue;
			// colours along the leg: leaf black, then red, then (6-path) red
			bool ok = !black(leg.vertices[1]) && (len == 2 ? !black(cur) : (!black(leg.vertices[2]) && black(cur)));
			if (ok) out.push_back(std::move(leg));
		}
		return out;
	}

	bool search(int edges_left) {
		if (edges_left == 3) return base_case();
		if (edges_left < 3) return false;
		if (failed_.count(alive_)) return false;
		std::vector<Leg> ls = legs();
		std::vector<std::pair<size_t, size_t>> candidates;
		for (size_t i = 0; i < ls.size(); ++i)
			for (size_t j = i + 1; j < ls.size(); ++j)
				if (ls[i].vertices.back() == ls[j].vertices.back() && ls[i].vertices.size() == ls[j].vertices.size())
					candidates.emplace_back(i, j);
		// legs are produced by increasing leaf id, so candidates are already ordered by smallest leaf
		for (auto [i, j] : candidates) {
			BuildingPath bp;
			bp.vertices = ls[i].vertices;
			bp.vertices.insert(bp.vertices.end(), ls[j].vertices.rbegin() + 1, ls[j].vertices.rend());
			set_path(bp.vertices, 0);
			peeled_.push_back(bp);
			if (search(edges_left - bp.length())) return true;
			peeled_.pop_back();
			set_path(bp.vertices, 1);
		}
		failed_.insert(alive_);
		return false;
	}

	const Graph& t_;
	std::vector<Color> color_;
	std::vector<char> alive_;
	std::vector<int> degree_;
	std::set<std::vector<char>> failed_;
	std::vector<BuildingPath> peeled_;
	std::vector<Vertex> start_;
};

} // namespace

std::optional<BuildingSequence> recognize_skeleton(const Graph& t) {
	if (!is_tree(t)) throw not_a_tree("graph is not a tree");
	if (t.edge_count() < 3 || t.edge_count() % 2 == 0) return std::nullopt;
	if (brrb_paths(t).empty()) return std::nullopt;
	return Peeler(t).run();
}

std::optional<BuildingSequence> recognize_skeleton(const EdgeList& tree_edges) {
	Subgraph s = edge_subgraph(tree_edges);
	std::optional<BuildingSequence> seq = recognize_skeleton(s.graph);
	if (!seq) return std::nullopt;
	return relabeled(*seq, s.to_host);
}

BuildingSequence relabeled(const BuildingSequence& seq, const std::vector<Vertex>& to_host) {
	BuildingSequence out = seq;
	for (Vertex& v : out.start) v = to_host.at(static_cast<size_t>(v));
	for (BuildingPath& bp : out.steps)
		for (Vertex& v : bp.vertices) v = to_host.at(static_cast<size_t>(v));
	return out;
}

std::vector<Walk> brrb_paths(const EdgeList& tree_edges) {
	Subgraph s = edge_subgraph(tree_edges);
	std::vector<Walk> out;
	for (const Walk& w : brrb_paths(s.graph)) {
		Walk p = s.lift(w);
		if (p.front() > p.back()) p = reversed(p);
		out.push_back(std::move(p));
	}
	std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) { return a.vertices < b.vertices; });
	return out;
}

// ---------------------------------------------------------------- rerooting

namespace {

bool same_edges(const Walk& a, const Walk& b) { return sorted_edges(a.edges()) == sorted_edges(b.edges()); }

// Induction on the number of steps, replacing the last building path.
BuildingSequence reroot_rec(const BuildingSequence& seq, const Walk& p) {
	if (seq.steps.empty()) {
		if (!same_edges(Walk::path(seq.start), p)) throw not_a_brrb_path("path is not the start of a 0-step sequence");
		return {p.vertices, {}};
	}
	const BuildingPath& last = seq.steps.back();
	BuildingSequence shorter = seq.prefix(seq.steps.size() - 1);
	Walk last_walk = last.walk();
	if (edges_disjoint(p.edges(), last_walk.edges())) {
		BuildingSequence out = reroot_rec(shorter, p);
		out.steps.push_back(last);
		return out;
	}
	Vertex v = last.joint();
	PathSplit halves = split_building_path(last);
	Walk outer_left = reversed(halves.left); // v .. x0
	Walk outer_right = halves.right;        // v .. xk
	EdgeList shorter_edges = shorter.edges();
	std::vector<Walk> candidates = brrb_paths(shorter_edges);

	if (last.length() == 6) {
		// p is one half of the 6-path; the other half is glued to a brrb-path ending at v
		Walk other;
		if (same_edges(p, halves.left)) other = outer_right;
		else if (same_edges(p, halves.right)) other = outer_left;
		else throw not_a_brrb_path("path overlaps a 6-path without being one of its halves");
		auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Walk& w) { return w.front() == v || w.back() == v; });
		if (it == candidates.end()) throw not_skeleton("no brrb-path ends at the joint of a 6-path");
		Walk pp = it->back() == v ? *it : reversed(*it);
		BuildingSequence inner = reroot_rec(shorter, pp);
		BuildingPath step;
		step.vertices = pp.vertices;
		step.vertices.insert(step.vertices.end(), other.vertices.begin() + 1, other.vertices.end());
		BuildingSequence out{p.vertices, {step}};
		out.steps.insert(out.steps.end(), inner.steps.begin(), inner.steps.end());
		return out;
	}

	// 4-path: p is one half extended by an edge vu into the previous tree
	Walk other;
	bool left_in = p.contains(halves.left.front()) && p.contains(halves.left.vertices[1]);
	bool right_in = p.contains(halves.right.back()) && p.contains(halves.right.vertices[1]);
	if (left_in == right_in || !p.contains(v)) throw not_a_brrb_path("path overlaps a 4-path in an unexpected way");
	other = left_in ? outer_right : outer_left;
	Vertex u = -1;
	for (Vertex x : p.vertices)
		if (!last_walk.contains(x)) u = x;
	if (u < 0) throw not_a_brrb_path("path does not leave the 4-path");
	auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Walk& w) {
		for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
			if (Edge(w.vertices[i], w.vertices[i + 1]) == Edge(u, v)) return true;
		return false;
	});
	if (it == candidates.end()) throw not_skeleton("no brrb-path through the edge at the joint of a 4-path");
	Walk pp = *it;
	if (pp.vertices[1] == u || pp.vertices[2] == u) throw not_skeleton("joint edge lies in the middle of a brrb-path");
	if (pp.front() != u) pp = reversed(pp); // u v w z
	BuildingSequence inner = reroot_rec(shorter, pp);
	BuildingPath step;
	step.vertices = {pp.vertices[3], pp.vertices[2], v};
	step.vertices.insert(step.vertices.end(), other.vertices.begin() + 1, other.vertices.end());
	BuildingSequence out{p.vertices, {step}};
	out.steps.insert(out.steps.end(), inner.steps.begin(), inner.steps.end());
	return out;
}

} // namespace

BuildingSequence reroot_sequence(const BuildingSequence& seq, const Walk& p) {
	EdgeList tree = seq.edges();
	bool brrb = false;
	for (const Walk& w : brrb_paths(tree))
		if (same_edges(w, p)) brrb = true;
	if (!brrb || p.vertices.size() != 4) throw not_a_brrb_path("path is not a brrb-path of the skeleton");
	return reroot_rec(seq, p);
}

BuildingSequence reroot_sequence(const Graph& t, const Walk& p) {
	if (!is_tree(t)) throw not_a_tree("graph is not a tree");
	if (!is_brrb_path(t, p)) throw not_a_brrb_path("path is not a brrb-path of the tree");
	std::optional<BuildingSequence> seq = recognize_skeleton(t);
	if (!seq) throw not_skeleton("tree is not a skeleton");
	return reroot_rec(*seq, p);
}

} // namespace pcd
