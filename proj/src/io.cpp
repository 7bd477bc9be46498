#include "pcd/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace pcd {

namespace {

std::string trim(std::string_view s) {
	size_t a = s.find_first_not_of(" \t\r\n");
	if (a == std::string_view::npos) return {};
	size_t b = s.find_last_not_of(" \t\r\n");
	return std::string(s.substr(a, b - a + 1));
}

const char* const kPalette[] = {"red3", "blue3", "green4", "orange2", "purple3", "cyan4", "gold3", "deeppink3", "sienna", "gray40"};

std::string vertex_line(Vertex v, const std::string& attrs) {
	return "  " + std::to_string(v) + (attrs.empty() ? "" : " [" + attrs + "]") + ";\n";
}

std::string edge_line(const Edge& e, const std::string& attrs) {
	return "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + (attrs.empty() ? "" : " [" + attrs + "]") + ";\n";
}

std::string color_attrs(Color c) {
	return c == Color::black ? "style=filled, fillcolor=black, fontcolor=white" : "style=filled, fillcolor=red, fontcolor=white";
}

} // namespace

Graph parse_edge_list(std::string_view text) {
	std::map<long long, Vertex> ids;
	std::set<Edge> seen;
	EdgeList edges;
	std::istringstream in{std::string(text)};
	std::string line;
	int line_no = 0;
	auto id_of = [&](long long label) {
		auto [it, fresh] = ids.try_emplace(label, static_cast<Vertex>(ids.size()));
		return it->second;
	};
	while (std::getline(in, line)) {
		++line_no;
		std::string body = trim(std::string_view(line).substr(0, line.find('#')));
		if (body.empty()) continue;
		std::istringstream tokens(body);
		std::vector<long long> values;
		std::string tok;
		while (tokens >> tok) {
			long long value = 0;
			auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
			if (ec != std::errc() || ptr != tok.data() + tok.size())
				throw parse_error("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
			values.push_back(value);
		}
		if (values.size() != 2) throw parse_error("line " + std::to_string(line_no) + ": expected two vertex labels");
		if (values[0] == values[1]) throw self_loop("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(values[0]));
		Vertex a = id_of(values[0]);
		Vertex b = id_of(values[1]);
		if (!seen.insert(Edge(a, b)).second)
			throw duplicate_edge("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(values[0]) + " " + std::to_string(values[1]));
		edges.emplace_back(a, b);
	}
	return Graph(static_cast<int>(ids.size()), edges);
}

std::string emit_edge_list(const Graph& g) {
	std::string out;
	for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
	return out;
}

Graph parse_graph6(std::string_view line) {
	std::string s = trim(line);
	if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
	if (s.empty()) throw parse_error("empty graph6 string");
	for (char ch : s)
		if (ch < 63 || ch > 126) throw parse_error("graph6 byte out of range");
	if (s[0] == 126) throw parse_error("graph6 long form (n > 62) is not supported");
	int n = s[0] - 63;
	size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
	size_t need = (bits + 5) / 6;
	if (s.size() != need + 1) throw parse_error("graph6 string has " + std::to_string(s.size() - 1) + " data bytes, expected " + std::to_string(need));
	EdgeList edges;
	size_t k = 0;
	for (int j = 1; j < n; ++j)
		for (int i = 0; i < j; ++i, ++k) {
			int byte = s[1 + k / 6] - 63;
			if (byte >> (5 - k % 6) & 1) edges.emplace_back(i, j);
		}
	for (; k < need * 6; ++k)
		if ((s[1 + k / 6] - 63) >> (5 - k % 6) & 1) throw parse_error("graph6 padding bits must be zero");
	return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
	int n = g.vertex_count();
	if (n > kGraph6VertexLimit) throw too_large("graph6 short form supports at most 62 vertices");
	std::string out(1, static_cast<char>(n + 63));
	int acc = 0, used = 0;
	for (int j = 1; j < n; ++j)
		for (int i = 0; i < j; ++i) {
			acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
			if (++used == 6) {
				out += static_cast<char>(acc + 63);
				acc = used = 0;
			}
		}
	if (used > 0) out += static_cast<char>((acc << (6 - used)) + 63);
	return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
	std::vector<Graph> out;
	std::string line;
	while (std::getline(in, line))
		if (!trim(line).empty()) out.push_back(parse_graph6(line));
	return out;
}

std::string emit_dot(const Graph& g) {
	std::string out = "graph G {\n";
	for (Vertex v = 0; v < g.vertex_count(); ++v) out += vertex_line(v, "");
	for (const Edge& e : g.edges()) out += edge_line(e, "");
	return out + "}\n";
}

std::string emit_dot(const Graph& g, const Decomposition& d) {
	std::map<Edge, size_t> owner;
	for (size_t i = 0; i < d.elements.size(); ++i)
		for (const Edge& e : d.elements[i].edges()) owner[e] = i;
	std::string out = "graph G {\n";
	for (Vertex v = 0; v < g.vertex_count(); ++v) out += vertex_line(v, "");
	for (const Edge& e : g.edges()) {
		auto it = owner.find(e);
		if (it == owner.end()) {
			out += edge_line(e, "color=gray, style=dotted");
			continue;
		}
		size_t i = it->second;
		out += edge_line(e, "color=" + std::string(kPalette[i % std::size(kPalette)]) + ", label=\"" + std::to_string(i) + "\"");
	}
	return out + "}\n";
}

std::string emit_dot(const Graph& g, const HangingSquareCertificate& cert) {
	EdgeList tree = sorted_edges(cert.skeleton.edges());
	std::map<Vertex, int> deg;
	for (const Edge& e : tree) {
		++deg[e.u];
		++deg[e.v];
	}
	std::string out = "graph G {\n";
	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		auto it = deg.find(v);
		out += vertex_line(v, it == deg.end() ? "" : color_attrs(it->second % 2 ? Color::black : Color::red));
	}
	for (const Edge& e : g.edges())
		out += edge_line(e, std::binary_search(tree.begin(), tree.end(), e) ? "penwidth=2" : "style=dashed");
	return out + "}\n";
}

std::string emit_dot(const Graph& g, const ParityColoring& c) {
	std::string out = "graph G {\n";
	for (Vertex v = 0; v < g.vertex_count(); ++v) out += vertex_line(v, color_attrs(c.color.at(static_cast<size_t>(v))));
	for (const Edge& e : g.edges()) out += edge_line(e, "");
	return out + "}\n";
}

} // namespace pcd
