#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace polyvis {

using Vertex = std::size_t;
/// Unordered vertex pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

enum class VertexOrder { kCyclic, kOrdered };

/// Simple undirected graph on vertices 0..n-1 whose vertex order is the index
/// order, read either linearly or cyclically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u][v]; }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  /// Returns true if the edge was new.
  bool add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Graph whose vertices are linearly ordered by index.
class OrderedGraph : public Graph {
 public:
  using Graph::Graph;
  static constexpr VertexOrder kOrder = VertexOrder::kOrdered;
};

/// Graph whose vertices are cyclically ordered 0, 1, ..., n-1.
class CyclicGraph : public Graph {
 public:
  using Graph::Graph;
  static constexpr VertexOrder kOrder = VertexOrder::kCyclic;
};

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
OrderedGraph induced_ordered_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace polyvis
