#include "indpath/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indpath {

Graph read_edge_list_text(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw std::runtime_error("edge list: negative vertex label");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(n, edges);
}

void write_edge_list_text(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("n") || !j.contains("edges"))
    throw std::runtime_error("graph json: required fields are {n, edges}");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("graph json: each edge must be a pair [u,v]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph::from_edge_list(n, edges);
}

void write_graph_json(std::ostream& out, const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  out << j.dump() << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return read_graph_json(in);
  return read_edge_list_text(in);
}

}  // namespace indpath
