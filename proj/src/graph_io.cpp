#include "glc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "glc/errors.hpp"

namespace glc {

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "{\n  \"format\": \"multigraph\",\n  \"version\": " << kGraphFormatVersion << ",\n";
  out << "  \"vertices\": [";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << (v ? ", " : "") << v;
  out << "],\n  \"edges\": [";
  for (const Edge& e : g.edges()) {
    out << (e.id ? ",\n" : "\n") << "    [" << e.id << ", " << e.u << ", " << e.v << "]";
  }
  out << (g.edge_count() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

Multigraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph file: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InputError("graph file: top level must be an object");
    if (doc.value("format", std::string()) != "multigraph") {
      throw InputError("graph file: \"format\" must be \"multigraph\"");
    }
    const int version = doc.at("version").get<int>();
    if (version != kGraphFormatVersion) {
      throw InputError("graph file: unsupported version " + std::to_string(version));
    }
    const auto vertices = doc.at("vertices").get<std::vector<long long>>();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] != static_cast<long long>(i)) {
        throw InputError("graph file: vertex ids must be 0..n-1 in order (position " +
                         std::to_string(i) + ")");
      }
    }
    std::vector<std::pair<VertexId, VertexId>> ends;
    const auto& edges = doc.at("edges");
    if (!edges.is_array()) throw InputError("graph file: \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto rec = edges[i].get<std::vector<long long>>();
      if (rec.size() != 3) throw InputError("graph file: edge record " + std::to_string(i) + " needs [id, u, v]");
      if (rec[0] != static_cast<long long>(i)) {
        throw InputError("graph file: edge ids must be 0..m-1 in order (position " + std::to_string(i) + ")");
      }
      const auto n = static_cast<long long>(vertices.size());
      if (rec[1] < 0 || rec[1] >= n || rec[2] < 0 || rec[2] >= n) {
        throw InputError("graph file: edge " + std::to_string(i) + " has an undeclared endpoint");
      }
      ends.emplace_back(static_cast<VertexId>(rec[1]), static_cast<VertexId>(rec[2]));
    }
    return Multigraph(static_cast<int>(vertices.size()), ends);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph file: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

void write_graph_file(const std::filesystem::path& path, const Multigraph& g) {
  write_text_file(path, format_graph(g));
}

std::string to_dot(const Multigraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"e" << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_morphism(const GraphMorphism& m) {
  nlohmann::ordered_json doc;
  doc["format"] = "bonding-map";
  doc["version"] = 1;
  doc["domain_vertices"] = m.domain().vertex_count();
  doc["codomain_vertices"] = m.codomain().vertex_count();
  doc["vertex_map"] = m.vertex_map();
  auto edges = nlohmann::ordered_json::array();
  for (const EdgeImage& im : m.edge_map()) {
    edges.push_back({im.collapses() ? "vertex" : "edge", im.target});
  }
  doc["edge_map"] = std::move(edges);
  return doc.dump(2) + "\n";
}

}  // namespace glc
