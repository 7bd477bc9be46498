#pragma once

#include "pcd/graph.hpp"
#include "pcd/hanging_square.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace pcd {

inline constexpr int kGraph6VertexLimit = 62;

// One "u v" pair per line, '#' starts a comment. Labels are arbitrary integers,
// renumbered densely in order of first appearance.
// Throws parse_error, self_loop, duplicate_edge (messages carry the line number).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Short-form graph6 only (n <= 62). Throws parse_error / too_large.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);
// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

std::string emit_dot(const Graph& g);
// elements coloured by index
std::string emit_dot(const Graph& g, const Decomposition& d);
// skeleton edges solid, bunch edges dashed, vertices black/red by skeleton parity
std::string emit_dot(const Graph& g, const HangingSquareCertificate& cert);
std::string emit_dot(const Graph& g, const ParityColoring& c);

} // namespace pcd
