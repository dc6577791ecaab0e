#include "polyvis/graph.hpp"

#include <stdexcept>
#include <string>

namespace polyvis {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size()) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adjacency_[u][v]) return false;
  adjacency_[u][v] = true;
  adjacency_[v][u] = true;
  ++edge_count_;
  return true;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u < size() && v < size() && adjacency_[u][v]) {
    adjacency_[u][v] = false;
    adjacency_[v][u] = false;
    --edge_count_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos; v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

OrderedGraph induced_ordered_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  OrderedGraph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
    }
  }
  return sub;
}

}  // namespace polyvis
