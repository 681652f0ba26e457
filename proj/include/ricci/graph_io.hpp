#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ricci/graph.hpp"

namespace ricci {

enum class GraphFormat { kEdges, kJson, kDot };

GraphFormat parse_graph_format(const std::string& name);
/// By extension: .json -> JSON, .dot/.gv -> DOT, anything else -> edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

// Edge list: one "u v" pair per line, '#' starts a comment, blank lines are
// ignored. A line holding a single id declares an isolated vertex (written
// only when one exists). Vertices are ordered by ascending label.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// {"vertices":[ids],"edges":[[u,v],...]} with an optional "interior":[ids].
// Vertex order follows the "vertices" array.
Graph read_json_graph(std::istream& in);
void write_json_graph(std::ostream& out, const Graph& g);

/// `graph G { 0; 1; 0 -- 1; }`; non-interior vertices carry [style=dashed].
/// The reader accepts exactly what the writer produces.
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");
Graph read_dot(std::istream& in);

/// All readers throw std::invalid_argument on malformed input.
Graph read_graph(std::istream& in, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format);

}  // namespace ricci
