#include "pcd/harness.hpp"

#include "pcd/decomposer.hpp"
#include "pcd/enumerate.hpp"
#include "pcd/gallai.hpp"
#include "pcd/io.hpp"
#include "pcd/oracle.hpp"

#include <chrono>
#include <map>
#include <set>

namespace pcd {

// ---------------------------------------------------------------- survey

int SurveyReport::members() const {
	int s = 0;
	for (const auto& c : per_n) s += c.members;
	return s;
}

int SurveyReport::hanging_square() const {
	int s = 0;
	for (const auto& c : per_n) s += c.hanging_square;
	return s;
}

int SurveyReport::decomposable() const {
	int s = 0;
	for (const auto& c : per_n) s += c.decomposable;
	return s;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SortKey {
	int n, m;
	std::uint64_t code;
	std::string g6;
	auto operator<=>(const SortKey&) const = default;
};

SortKey sort_key(const Graph& g) {
	std::uint64_t code = g.vertex_count() <= kCanonicalVertexLimit ? canonical_form(g).code : 0;
	std::string g6 = g.vertex_count() <= kGraph6VertexLimit ? emit_graph6(g) : emit_edge_list(g);
	return {g.vertex_count(), g.edge_count(), code, g6};
}

bool all_paths(const Decomposition& d) {
	return std::all_of(d.elements.begin(), d.elements.end(), [](const Walk& w) { return !w.is_cycle(); });
}

} // namespace

SurveyReport dichotomy_survey(const std::vector<Graph>& graphs, const SurveyOptions& options) {
	SurveyReport report;
	std::map<std::string, double> timing;
	auto timed = [&](const char* phase, auto&& fn) {
		auto t0 = Clock::now();
		auto r = fn();
		timing[phase] += std::chrono::duration<double>(Clock::now() - t0).count();
		return r;
	};

	std::vector<std::pair<SortKey, const Graph*>> order;
	for (const Graph& g : graphs) order.emplace_back(sort_key(g), &g);
	std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

	std::map<int, SurveyCounts> counts;
	for (const auto& [key, gp] : order) {
		const Graph& g = *gp;
		auto violation = [&](const std::string& reason) { report.violations.push_back({key.g6, reason}); };
		if (!in_class_g(g)) {
			++report.skipped;
			continue;
		}
		SurveyCounts& c = counts[g.vertex_count()];
		c.n = g.vertex_count();
		++c.members;
		try {
			auto cert = timed("recognize", [&] { return recognize_hanging_square(g); });
			auto exact = timed("oracle", [&] { return decompose_4pc_exact(g, {true}); });
			if (cert) {
				++c.hanging_square;
				if (!verify_hs_certificate(g, *cert).ok) violation("certificate does not verify");
				Decomposition canon = hs_canonical_decomposition(*cert);
				if (!validate_decomposition(g, canon).ok) violation("canonical decomposition does not validate");
			}
			if (exact) {
				++c.decomposable;
				if (!validate_decomposition(g, *exact).ok) violation("oracle decomposition does not validate");
			}
			if (cert && exact) violation("hanging-square graph has a 4-pc decomposition");
			if (!cert && !exact) violation("neither hanging-square nor 4-pc decomposable");

			DichotomyResult r = timed("decompose", [&] { return decompose_4pc(g); });
			if (r.provenance == Provenance::oracle_fallback) ++report.fallback_count;
			if (r.decomposable() != exact.has_value()) violation("decompose_4pc disagrees with the oracle");
			if (r.decomposition && !validate_decomposition(g, *r.decomposition).ok) violation("decompose_4pc output does not validate");
			if (r.certificate && !verify_hs_certificate(g, *r.certificate).ok) violation("decompose_4pc certificate does not verify");

			int bound = (g.vertex_count() + 1) / 2;
			bool gallai_applies = options.gallai && g.edge_count() <= 4 * bound && g.edge_count() <= options.max_edges &&
			                      !(cert && g.edge_count() > kMinPathEdgeLimit);
			if (gallai_applies) {
				++report.gallai_checked;
				try {
					GallaiResult gr = timed("gallai", [&] { return gallai_decomposition(g); });
					if (!validate_decomposition(g, gr.paths).ok || !all_paths(gr.paths)) violation("gallai output is not a path decomposition");
					else if (!gr.within_bound) violation("gallai output exceeds ceil(n/2) paths");
					else ++report.gallai_within_bound;
				} catch (const merge_exhausted& e) {
					++report.merge_exhausted_count;
					violation(std::string("MergeExhausted: ") + e.what());
				}
			}
		} catch (const error& e) {
			violation(e.kind() + ": " + e.what());
		}
	}
	for (const auto& [n, c] : counts) report.per_n.push_back(c);
	if (options.timing) report.timing = timing;
	return report;
}

// ---------------------------------------------------------------- generators

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
	return v.at(static_cast<size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1)));
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Vertex next_free(const EdgeList& edges) {
	Vertex m = -1;
	for (const Edge& e : edges) m = std::max(m, e.v);
	return m + 1;
}

std::vector<Vertex> fresh(Vertex& next, int count) {
	std::vector<Vertex> out;
	for (int i = 0; i < count; ++i) out.push_back(next++);
	return out;
}

// cycle of the given length through one or two anchors, fresh elsewhere
Walk cycle_through(Rng& rng, const std::vector<Vertex>& anchors, int length, Vertex& next) {
	std::vector<Vertex> vs{anchors[0]};
	if (anchors.size() == 1) {
		for (Vertex v : fresh(next, length - 1)) vs.push_back(v);
		return Walk::cycle(vs);
	}
	int arc = uniform(rng, 2, length - 2);
	for (Vertex v : fresh(next, arc - 1)) vs.push_back(v);
	vs.push_back(anchors[1]);
	for (Vertex v : fresh(next, length - arc - 1)) vs.push_back(v);
	return Walk::cycle(vs);
}

// path of the given length with anchors at increasing random positions
Walk path_through(Rng& rng, const std::vector<Vertex>& anchors, int length, Vertex& next, bool inner_only) {
	std::vector<int> slots;
	int lo = inner_only ? 1 : 0, hi = inner_only ? length - 1 : length;
	for (int i = lo; i <= hi; ++i) slots.push_back(i);
	std::shuffle(slots.begin(), slots.end(), rng);
	std::vector<int> pos(slots.begin(), slots.begin() + static_cast<long>(std::min(anchors.size(), slots.size())));
	std::sort(pos.begin(), pos.end());
	std::vector<Vertex> vs;
	size_t a = 0;
	for (int i = 0; i <= length; ++i) {
		if (a < pos.size() && pos[a] == i) vs.push_back(anchors[a++]);
		else vs.push_back(next++);
	}
	return Walk::path(vs);
}

// a walk mixing vertices of `pool` (probability p each) with fresh ones
std::vector<Vertex> mixed_sequence(Rng& rng, const std::vector<Vertex>& pool, int count, double p, Vertex& next) {
	std::vector<Vertex> vs;
	for (int i = 0; i < count; ++i) {
		if (coin(rng, p)) {
			Vertex v = pick(rng, pool);
			if (std::find(vs.begin(), vs.end(), v) == vs.end()) {
				vs.push_back(v);
				continue;
			}
		}
		vs.push_back(next++);
	}
	return vs;
}

std::vector<Vertex> distinct_sample(Rng& rng, std::vector<Vertex> pool, int count) {
	std::shuffle(pool.begin(), pool.end(), rng);
	pool.resize(std::min(pool.size(), static_cast<size_t>(count)));
	return pool;
}

std::vector<Vertex> free_vertices(const HangingSquareCertificate& h, const Walk& q) {
	std::vector<Vertex> tv = h.skeleton.vertices();
	std::vector<Vertex> out;
	for (Vertex v : q.vertices)
		if (!std::binary_search(tv.begin(), tv.end(), v)) out.push_back(v);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<Walk> squares_of(const HangingSquareCertificate& h) {
	std::vector<Walk> out;
	for (const Bunch& b : h.bunches)
		for (const Walk& q : b.squares) out.push_back(q);
	return out;
}

Walk relabeled_walk(const Walk& w, const std::map<Vertex, Vertex>& m) {
	Walk out = w;
	for (Vertex& v : out.vertices) {
		auto it = m.find(v);
		if (it != m.end()) v = it->second;
	}
	return out;
}

HangingSquareCertificate relabeled_certificate(const HangingSquareCertificate& c, const std::map<Vertex, Vertex>& m) {
	auto f = [&](Vertex v) {
		auto it = m.find(v);
		return it == m.end() ? v : it->second;
	};
	HangingSquareCertificate out = c;
	for (Vertex& v : out.skeleton.start) v = f(v);
	for (BuildingPath& bp : out.skeleton.steps)
		for (Vertex& v : bp.vertices) v = f(v);
	for (Bunch& b : out.bunches) {
		b.a = f(b.a);
		b.b = f(b.b);
		for (Walk& q : b.squares) q = relabeled_walk(q, m);
		for (Vertex& v : b.identified_joints) v = f(v);
		std::sort(b.identified_joints.begin(), b.identified_joints.end());
	}
	for (OccupationRecord& o : out.occupations) o.path = relabeled_walk(o.path, m);
	return out;
}

constexpr int kSamplingAttempts = 400;

std::optional<MergeCase> sample_once(MergeKind kind, Rng& rng) {
	MergeCase c;
	c.kind = kind;
	switch (kind) {
	case MergeKind::hs_long_cycle: {
		c.host = random_hanging_square(rng, 3, 0, 2);
		Vertex next = next_free(c.host->edges());
		std::vector<Vertex> tv = c.host->skeleton.vertices();
		std::vector<Vertex> anchors{pick(rng, tv)};
		if (coin(rng, 0.4)) {
			Vertex b = pick(rng, edge_vertices(c.host->edges()));
			if (b != anchors[0]) anchors.push_back(b);
		}
		c.attached = cycle_through(rng, anchors, uniform(rng, 5, 8), next);
		break;
	}
	case MergeKind::hs_square_cycle:
	case MergeKind::hs_short_path:
	case MergeKind::hs_two_squares: {
		c.host = random_hanging_square(rng, 3, 1, 2);
		std::vector<Walk> qs = squares_of(*c.host);
		c.square = pick(rng, qs);
		Vertex next = next_free(c.host->edges());
		std::vector<Vertex> vq = free_vertices(*c.host, *c.square);
		if (vq.empty()) return std::nullopt;
		if (kind == MergeKind::hs_square_cycle) {
			std::vector<Vertex> anchors{pick(rng, vq)};
			if (coin(rng, 0.4)) {
				Vertex b = pick(rng, edge_vertices(c.host->edges()));
				if (b != anchors[0]) anchors.push_back(b);
			}
			c.attached = cycle_through(rng, anchors, uniform(rng, 4, 7), next);
		} else if (kind == MergeKind::hs_short_path) {
			std::vector<Vertex> anchors = distinct_sample(rng, vq, uniform(rng, 1, 2));
			std::shuffle(anchors.begin(), anchors.end(), rng);
			c.attached = path_through(rng, anchors, uniform(rng, 4, 7), next, false);
		} else {
			std::vector<Vertex> tv = c.host->skeleton.vertices();
			std::vector<Vertex> hv = edge_vertices(c.host->edges());
			Vertex a, b;
			int mode = uniform(rng, 0, 2);
			std::vector<Walk> brrb = brrb_paths(c.host->skeleton.edges());
			if (mode == 0 && !brrb.empty()) {
				const Walk& p = pick(rng, brrb);
				bool inner = coin(rng, 0.5);
				a = p.vertices[inner ? 1 : 0];
				b = p.vertices[inner ? 3 : 2];
			} else if (mode == 1) {
				a = pick(rng, tv);
				b = next++;
			} else {
				a = pick(rng, hv);
				b = pick(rng, hv);
				if (a == b) return std::nullopt;
			}
			Vertex m1 = next++, m2 = next++;
			c.attached = Walk::cycle({a, m1, b, m2});
		}
		break;
	}
	case MergeKind::skeleton_last_path_cycle: {
		BuildingSequence t = random_skeleton(rng, 3);
		if (t.steps.empty()) return std::nullopt;
		c.skeleton = t;
		Vertex next = next_free(t.edges());
		std::vector<Vertex> tv = t.vertices();
		std::vector<Vertex> anchors;
		if (coin(rng, 0.5)) {
			std::vector<Vertex> last = t.steps.back().vertices;
			anchors.push_back(pick(rng, last));
		} else {
			anchors.push_back(pick(rng, tv));
		}
		if (coin(rng, 0.5)) {
			Vertex b = pick(rng, tv);
			if (b != anchors[0]) anchors.push_back(b);
		}
		c.attached = cycle_through(rng, anchors, 4, next);
		break;
	}
	case MergeKind::two_basis: {
		HangingSquareCertificate h = random_hanging_square(rng, 0, 1, 1);
		Vertex next = next_free(h.edges());
		HangingSquareCertificate h2 = random_hanging_square(rng, 0, 1, 1, next);
		if (h.bunches.size() != 1 || h2.bunches.size() != 1 || h.bunches[0].k() != 1 || h2.bunches[0].k() != 1) return std::nullopt;
		std::vector<Vertex> vq = free_vertices(h, h.bunches[0].squares[0]);
		std::vector<Vertex> vq2 = free_vertices(h2, h2.bunches[0].squares[0]);
		int glue = uniform(rng, 1, 2);
		std::vector<Vertex> from = distinct_sample(rng, vq2, glue), to = distinct_sample(rng, vq, glue);
		std::map<Vertex, Vertex> m;
		for (size_t i = 0; i < std::min(from.size(), to.size()); ++i) m[from[i]] = to[i];
		c.host = h;
		c.second_host = relabeled_certificate(h2, m);
		break;
	}
	case MergeKind::tree_path: {
		BuildingSequence t = random_skeleton(rng, 3);
		c.skeleton = t;
		Vertex next = next_free(t.edges());
		c.attached = path_through(rng, {pick(rng, t.vertices())}, uniform(rng, 4, 9), next, true);
		break;
	}
	case MergeKind::cycle_path:
	case MergeKind::two_cycles: {
		Vertex next = 0;
		c.base = Walk::cycle(fresh(next, uniform(rng, 4, kind == MergeKind::cycle_path ? 9 : 7)));
		if (kind == MergeKind::cycle_path) c.attached = Walk::path(mixed_sequence(rng, c.base->vertices, uniform(rng, 1, 7) + 1, 0.3, next));
		else c.attached = Walk::cycle(mixed_sequence(rng, c.base->vertices, uniform(rng, 4, 7), 0.35, next));
		break;
	}
	}
	return c;
}

} // namespace

BuildingSequence random_skeleton(Rng& rng, int max_steps, Vertex first_id) {
	BuildingSequence seq;
	seq.start = {first_id, first_id + 1, first_id + 2, first_id + 3};
	Vertex next = first_id + 4;
	int steps = uniform(rng, 0, max_steps);
	for (int s = 0; s < steps; ++s)
		for (int attempt = 0; attempt < 50; ++attempt) {
			int length = coin(rng, 0.5) ? 4 : 6;
			Vertex joint = pick(rng, seq.vertices());
			BuildingPath bp;
			for (int i = 0; i <= length; ++i) bp.vertices.push_back(i == length / 2 ? joint : next + i);
			BuildingSequence candidate = seq;
			candidate.steps.push_back(bp);
			if (!check_sequence_structure(candidate).ok) continue;
			seq = candidate;
			next += length + 1;
			break;
		}
	return seq;
}

HangingSquareCertificate random_hanging_square(Rng& rng, int max_steps, int min_bunches, int max_bunches, Vertex first_id) {
	for (;;) {
		BuildingSequence t = random_skeleton(rng, max_steps, first_id);
		EdgeList edges = t.edges();
		Vertex next = next_free(edges);
		std::vector<Vertex> tv = t.vertices();
		std::vector<Walk> brrb = brrb_paths(t.edges());
		int count = uniform(rng, min_bunches, max_bunches);
		for (int b = 0; b < count; ++b) {
			Vertex a, z;
			if (coin(rng, 0.35) && !brrb.empty()) {
				const Walk& p = pick(rng, brrb);
				bool inner = coin(rng, 0.5);
				a = p.vertices[inner ? 1 : 0];
				z = p.vertices[inner ? 3 : 2];
			} else {
				a = pick(rng, tv);
				z = next++;
			}
			int k = uniform(rng, 1, 3);
			for (int i = 0; i < k; ++i) {
				Vertex m1 = next++, m2 = next++;
				edges = edge_union(edges, Walk::cycle({a, m1, z, m2}).edges());
			}
		}
		edges = sorted_edges(edges);
		if (!in_class_g(edge_subgraph(edges).graph)) continue;
		auto cert = find_hs_certificate(edges);
		if (!cert || static_cast<int>(cert->bunches.size()) < min_bunches) continue;
		if (std::any_of(cert->bunches.begin(), cert->bunches.end(), [](const Bunch& b) { return b.k() > 3; })) continue;
		return *cert;
	}
}

std::optional<MergeCase> random_merge_case(MergeKind kind, Rng& rng) {
	for (int attempt = 0; attempt < kSamplingAttempts; ++attempt) {
		auto c = sample_once(kind, rng);
		if (c && check_merge_preconditions(*c).ok) return c;
	}
	return std::nullopt;
}

MergeCase mutate_merge_case(const MergeCase& c, Rng& rng) {
	MergeCase m = c;
	EdgeList all = c.edges();
	Vertex next = next_free(all);
	int choice = uniform(rng, 0, 2);
	if (choice == 0) {
		// detach: move the attached part onto fresh vertices
		if (c.kind == MergeKind::two_basis) {
			std::map<Vertex, Vertex> shift;
			for (Vertex v : edge_vertices(c.second_host->edges())) shift[v] = next++;
			m.second_host = relabeled_certificate(*c.second_host, shift);
		} else {
			std::map<Vertex, Vertex> shift;
			for (Vertex v : c.attached.vertices) shift[v] = next++;
			m.attached = relabeled_walk(c.attached, shift);
		}
		return m;
	}
	if (choice == 1 && c.kind != MergeKind::two_basis) {
		// wrong size for the kind, anchored where the original was
		Vertex anchor = c.attached.vertices.front();
		std::vector<Vertex> host_vs = edge_vertices(edge_difference(all, sorted_edges(c.attached.edges())));
		for (Vertex v : c.attached.vertices)
			if (std::binary_search(host_vs.begin(), host_vs.end(), v)) {
				anchor = v;
				break;
			}
		switch (c.kind) {
		case MergeKind::hs_long_cycle: m.attached = cycle_through(rng, {anchor}, 4, next); break;
		case MergeKind::hs_square_cycle: m.attached = cycle_through(rng, {anchor}, 3, next); break;
		case MergeKind::skeleton_last_path_cycle:
		case MergeKind::hs_two_squares: m.attached = cycle_through(rng, {anchor}, 5, next); break;
		case MergeKind::hs_short_path: m.attached = path_through(rng, {anchor}, 3, next, false); break;
		case MergeKind::tree_path: m.attached = path_through(rng, {anchor}, 3, next, true); break;
		case MergeKind::cycle_path: m.attached = path_through(rng, {anchor}, 8, next, false); break;
		case MergeKind::two_cycles: m.attached = cycle_through(rng, {anchor}, 8, next); break;
		case MergeKind::two_basis: break;
		}
		return m;
	}
	// overlap: reuse an element of the host as the attached part
	if (c.kind == MergeKind::two_basis) m.second_host = c.host;
	else if (c.base) m.attached = *c.base;
	else if (c.host) m.attached = Walk::path(c.host->skeleton.start);
	else m.attached = Walk::path(c.skeleton->start);
	return m;
}

FuzzReport lemma_fuzz(MergeKind kind, int trials, std::uint64_t seed, int mutation_trials) {
	FuzzReport r;
	r.kind = kind;
	r.seed = seed;
	r.trials = trials;
	Rng rng(seed);
	auto note = [&](const std::string& s) {
		if (r.failures.size() < 5) r.failures.push_back(s);
	};
	for (int t = 0; t < trials; ++t) {
		auto c = random_merge_case(kind, rng);
		if (!c) {
			++r.generator_failures;
			note("trial " + std::to_string(t) + ": generator gave up");
			continue;
		}
		++r.generated;
		try {
			MergeResult res = lemma_merge_detailed(*c);
			Subgraph s = edge_subgraph(c->edges());
			std::map<Vertex, Vertex> local;
			for (size_t i = 0; i < s.to_host.size(); ++i) local[s.to_host[i]] = static_cast<Vertex>(i);
			Decomposition d = res.decomposition;
			for (Walk& w : d.elements) w = relabeled_walk(w, local);
			bool ok = validate_decomposition(s.graph, d).ok;
			if (kind == MergeKind::cycle_path) ok = ok && d.elements.size() == 2 && all_paths(d);
			if (kind == MergeKind::two_cycles) ok = ok && all_paths(d) && d.min_length == 4;
			if (ok) {
				++r.valid;
				++r.routes[res.route];
			} else {
				note("trial " + std::to_string(t) + ": output does not validate");
			}
		} catch (const error& e) {
			note("trial " + std::to_string(t) + ": " + e.kind() + ": " + e.what());
		}
	}
	for (int t = 0; t < mutation_trials; ++t) {
		auto c = random_merge_case(kind, rng);
		if (!c) continue;
		++r.mutation_trials;
		MergeCase bad = mutate_merge_case(*c, rng);
		if (!check_merge_preconditions(bad).ok) ++r.mutations_rejected;
		else note("mutation " + std::to_string(t) + " accepted");
	}
	return r;
}

} // namespace pcd
