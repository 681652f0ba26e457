#include "ricci/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ricci {

namespace {

Graph build_from_labels(const std::vector<std::int64_t>& labels,
                        const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
  std::map<std::int64_t, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw std::invalid_argument("duplicate vertex id " + std::to_string(labels[i]));
    }
  }
  Graph g(labels.size());
  g.set_labels(labels);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw std::invalid_argument("edge refers to an undeclared vertex");
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    g.add_edge(ia->second, ib->second);
  }
  return g;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edges") return GraphFormat::kEdges;
  if (name == "json") return GraphFormat::kJson;
  if (name == "dot") return GraphFormat::kDot;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return GraphFormat::kJson;
  if (ext == ".dot" || ext == ".gv") return GraphFormat::kDot;
  return GraphFormat::kEdges;
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::int64_t> labels;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::int64_t> ids;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::int64_t id = 0;
      try {
        id = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad vertex id '" +
                                    token + "'");
      }
      ids.push_back(id);
    }
    if (ids.empty()) continue;
    if (ids.size() > 2) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected \"u v\" or a single vertex id");
    }
    labels.insert(labels.end(), ids.begin(), ids.end());
    if (ids.size() == 2) edges.emplace_back(ids[0], ids[1]);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return build_from_labels(labels, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

Graph read_json_graph(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    std::vector<std::int64_t> labels = doc.at("vertices").get<std::vector<std::int64_t>>();
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("each edge must be a two-element array");
      }
      edges.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    Graph g = build_from_labels(labels, edges);
    if (doc.contains("interior")) {
      std::map<std::int64_t, Vertex> index;
      for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
      std::vector<bool> interior(labels.size(), false);
      for (auto id : doc["interior"].get<std::vector<std::int64_t>>()) {
        auto it = index.find(id);
        if (it == index.end()) throw std::invalid_argument("interior id is not a vertex");
        interior[it->second] = true;
      }
      g.set_interior(std::move(interior));
    }
    return g;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed JSON graph: ") + err.what());
  }
}

void write_json_graph(std::ostream& out, const Graph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.labels();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  doc["edges"] = std::move(edges);
  if (g.has_interior_marking()) {
    auto interior = nlohmann::json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.is_interior(v)) interior.push_back(g.label(v));
    }
    doc["interior"] = std::move(interior);
  }
  out << doc.dump() << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << g.label(v);
    if (g.has_interior_marking() && !g.is_interior(v)) out << " [style=dashed]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << g.label(e.u) << " -- " << g.label(e.v) << ";\n";
  }
  out << "}\n";
}

Graph read_dot(std::istream& in) {
  static const std::regex kEdge(R"(^\s*(-?\d+)\s*--\s*(-?\d+)\s*;?\s*$)");
  static const std::regex kNode(R"(^\s*(-?\d+)\s*(\[style=dashed\])?\s*;?\s*$)");
  static const std::regex kFrame(R"(^\s*(graph\s+\w*\s*\{|\})\s*$)");
  std::vector<std::int64_t> labels;
  std::vector<std::int64_t> boundary;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (std::regex_match(line, m, kEdge)) {
      edges.emplace_back(std::stoll(m[1]), std::stoll(m[2]));
    } else if (std::regex_match(line, m, kNode)) {
      labels.push_back(std::stoll(m[1]));
      if (m[2].matched) boundary.push_back(labels.back());
    } else if (!std::regex_match(line, kFrame)) {
      throw std::invalid_argument("unsupported DOT line: " + line);
    }
  }
  Graph g = build_from_labels(labels, edges);
  if (!boundary.empty()) {
    std::vector<bool> interior(labels.size(), true);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      interior[i] = std::find(boundary.begin(), boundary.end(), labels[i]) == boundary.end();
    }
    g.set_interior(std::move(interior));
  }
  return g;
}

Graph read_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdges:
      return read_edge_list(in);
    case GraphFormat::kJson:
      return read_json_graph(in);
    case GraphFormat::kDot:
      return read_dot(in);
  }
  throw std::invalid_argument("unknown graph format");
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdges:
      write_edge_list(out, g);
      return;
    case GraphFormat::kJson:
      write_json_graph(out, g);
      return;
    case GraphFormat::kDot:
      write_dot(out, g);
      return;
  }
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  return read_graph(in, format_for_path(path));
}

void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  write_graph(out, g, format);
}

}  // namespace ricci
