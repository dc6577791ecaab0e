#pragma once

#include "polyvis/budget.hpp"
#include "polyvis/graph.hpp"

#include <optional>
#include <vector>

namespace polyvis {

/// True iff the endpoints interleave (a < c < b < d after sorting each pair,
/// in either role). Edges sharing an endpoint never cross.
bool edges_cross(Edge e1, Edge e2);

/// G_v: relabels v, v+1, ..., v-1 (mod n) as 0, 1, ..., n-1.
/// Throws std::out_of_range if v >= n.
OrderedGraph rotate_to_order(const CyclicGraph& g, Vertex v);

struct BipartiteSplit {
  /// Vertices whose kept neighbors are all greater.
  std::vector<Vertex> left;
  /// Vertices whose kept neighbors are all smaller.
  std::vector<Vertex> right;
  /// Kept edges (l, r) with l in `left`, r in `right`, l < r.
  std::vector<Edge> kept;
};

/// Derandomized left/right split keeping at least ceil(|E|/4) edges.
/// Vertices are fixed in index order, each placed on the side that maximizes
/// the conditional expectation of surviving edges (ties go left).
BipartiteSplit bipartite_split(const OrderedGraph& g);

/// The ordered graph on the same vertex set holding only kept edges.
OrderedGraph kept_subgraph(const BipartiteSplit& split, std::size_t n);

/// Throws std::invalid_argument if u == v. For ordered graphs the pair is
/// taken with the smaller vertex first; for cyclic graphs the six vertices
/// must appear in cyclic order u1, u, u2, v1, v, v2.
bool is_double_cherry(const OrderedGraph& g, Vertex u, Vertex v);
bool is_double_cherry(const CyclicGraph& g, Vertex u, Vertex v);

/// Edge-crossing relation of a graph, built once and queried many times.
class CrossingIndex {
 public:
  explicit CrossingIndex(const Graph& g);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<std::size_t>>& crossings() const noexcept { return crossings_; }

  /// All v such that a crossing sequence from u to v exists: edges
  /// e_1, ..., e_k with u the smaller endpoint of e_1, v the greater
  /// endpoint of e_k, and e_i = (a,b), e_{i+1} = (c,d) satisfying
  /// a < c < b < d. With kCyclic the order is the rotation that makes u the
  /// smallest vertex.
  VertexSet reachable_from(Vertex u, VertexOrder order) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> crossings_;
};

bool exists_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v);
bool exists_crossing_sequence(const CyclicGraph& g, Vertex u, Vertex v);

struct KttWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

struct KttResult {
  SearchStatus status = SearchStatus::kNone;
  KttWitness witness;
  std::uint64_t nodes = 0;
};

/// Exact search for K_{t,t}; INCONCLUSIVE only when the node budget runs
/// out. The witness is the lexicographically first side A with the first t
/// common neighbours as B. Throws std::invalid_argument if t < 1.
KttResult find_complete_bipartite(const Graph& g, std::size_t t, SearchBudget budget = {});

/// Ordered pattern on vertices 0..k-1.
struct PatternGraph {
  std::size_t k = 0;
  std::vector<Edge> edges;

  /// a < b < c with edges (a,b), (b,c).
  static PatternGraph h0();
  /// a < b < c < d < e with edges (a,e), (b,d), (c,e).
  static PatternGraph h1();
};

/// Lexicographically first order-preserving injective map of pattern
/// vertices to graph vertices that carries every pattern edge onto an edge.
std::optional<std::vector<Vertex>> find_ordered_pattern(const OrderedGraph& g, const PatternGraph& pattern);

struct CrossingFamily {
  std::size_t k = 0;
  /// Lexicographically first maximum family of pairwise crossing edges.
  std::vector<Edge> edges;
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Maximum clique of the edge-crossing relation by branch and bound with a
/// greedy colouring bound. If the budget runs out `exact` is false and `k`
/// is only a lower bound.
CrossingFamily max_pairwise_crossing(const Graph& g, SearchBudget budget = {});

}  // namespace polyvis
