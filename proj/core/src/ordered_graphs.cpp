#include "polyvis/ordered_graphs.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace polyvis {

bool edges_cross(Edge e1, Edge e2) {
  auto [a, b] = make_edge(e1.first, e1.second);
  auto [c, d] = make_edge(e2.first, e2.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

OrderedGraph rotate_to_order(const CyclicGraph& g, Vertex v) {
  const std::size_t n = g.size();
  if (v >= n) throw std::out_of_range("rotate_to_order: vertex " + std::to_string(v) + " out of range");
  OrderedGraph out(n);
  for (const auto& [a, b] : g.edges()) out.add_edge((a + n - v) % n, (b + n - v) % n);
  return out;
}

BipartiteSplit bipartite_split(const OrderedGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> in_left(n, 0);
  BipartiteSplit split;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t earlier_left = 0;
    std::size_t later = 0;
    const auto& nb = g.neighbors(v);
    for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
      if (w < v) {
        earlier_left += in_left[w] ? 1 : 0;
      } else {
        ++later;
      }
    }
    // Expected survivors among v's edges: later/2 if v goes left,
    // earlier_left if v goes right.
    if (later >= 2 * earlier_left) {
      in_left[v] = 1;
      split.left.push_back(v);
    } else {
      split.right.push_back(v);
    }
  }
  for (const auto& [a, b] : g.edges()) {
    if (in_left[a] && !in_left[b]) split.kept.emplace_back(a, b);
  }
  return split;
}

OrderedGraph kept_subgraph(const BipartiteSplit& split, std::size_t n) { return OrderedGraph(n, split.kept); }

namespace {

std::optional<Vertex> first_in(const VertexSet& s, Vertex lo, Vertex hi) {
  // First member in the open interval (lo, hi).
  auto w = s.find_next(lo);
  if (w != VertexSet::npos && w < hi) return w;
  return std::nullopt;
}

std::optional<Vertex> last_in(const VertexSet& s, Vertex lo, Vertex hi) {
  std::optional<Vertex> best;
  for (auto w = s.find_next(lo); w != VertexSet::npos && w < hi; w = s.find_next(w)) best = w;
  return best;
}

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.size() || v >= g.size()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("double cherry needs two distinct vertices");
}

}  // namespace

bool is_double_cherry(const OrderedGraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) return true;
  if (u > v) std::swap(u, v);
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  // u1 < u < u2 < v1 < v < v2 with u1, u2 in N(v) and v1, v2 in N(u).
  const bool has_u1 = nv.find_first() < u;
  const bool has_v2 = nu.find_next(v) != VertexSet::npos;
  if (!has_u1 || !has_v2) return false;
  const auto u2 = first_in(nv, u, v);
  const auto v1 = last_in(nu, u, v);
  return u2 && v1 && *u2 < *v1;
}

bool is_double_cherry(const CyclicGraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) return true;
  // In G_u the cyclic pattern u1,u,u2,v1,v,v2 reads u < u2 < v1 < v < v2 < u1.
  const OrderedGraph r = rotate_to_order(g, u);
  const std::size_t n = g.size();
  const Vertex p = (v + n - u) % n;
  const auto& nu = r.neighbors(0);
  const auto& nv = r.neighbors(p);
  const auto u2 = first_in(nv, 0, p);
  const auto v1 = last_in(nu, 0, p);
  if (!u2 || !v1 || *u2 >= *v1) return false;
  const auto v2 = first_in(nu, p, n);
  const auto u1 = last_in(nv, p, n);
  return v2 && u1 && *v2 < *u1;
}

CrossingIndex::CrossingIndex(const Graph& g) : n_(g.size()), edges_(g.edges()), crossings_(edges_.size()) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_cross(edges_[i], edges_[j])) {
        crossings_[i].push_back(j);
        crossings_[j].push_back(i);
      }
    }
  }
}

VertexSet CrossingIndex::reachable_from(Vertex u, VertexOrder order) const {
  auto pos = [&](Vertex w) { return order == VertexOrder::kCyclic ? (w + n_ - u) % n_ : w; };
  VertexSet targets(n_);
  std::vector<char> seen(edges_.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    const Vertex lo = pos(a) < pos(b) ? a : b;
    if (lo == u) {
      seen[e] = 1;
      queue.push_back(e);
    }
  }
  auto low = [&](std::size_t e) { return std::min(pos(edges_[e].first), pos(edges_[e].second)); };
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    const auto [a, b] = edges_[e];
    targets.set(pos(a) < pos(b) ? b : a);
    // The next edge (c,d) must satisfy a < c < b < d: crossings only lead
    // forward.
    for (std::size_t f : crossings_[e]) {
      if (!seen[f] && low(f) > low(e)) {
        seen[f] = 1;
        queue.push_back(f);
      }
    }
  }
  return targets;
}

bool exists_crossing_sequence(const OrderedGraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  return CrossingIndex(g).reachable_from(u, VertexOrder::kOrdered)[v];
}

bool exists_crossing_sequence(const CyclicGraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  return CrossingIndex(g).reachable_from(u, VertexOrder::kCyclic)[v];
}

namespace {

struct KttSearch {
  const Graph& g;
  std::size_t t;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Vertex> chosen;
  std::optional<KttWitness> found;

  void run(const VertexSet* common, Vertex start) {
    if (found || exhausted) return;
    if (++nodes > max_nodes) {
      exhausted = true;
      return;
    }
    if (chosen.size() == t) {
      KttWitness w{chosen, {}};
      for (auto b = common->find_first(); w.b.size() < t; b = common->find_next(b)) w.b.push_back(b);
      found = std::move(w);
      return;
    }
    const std::size_t n = g.size();
    for (Vertex v = start; v + (t - chosen.size()) <= n; ++v) {
      if (g.degree(v) < t) continue;
      VertexSet next = common ? (*common & g.neighbors(v)) : g.neighbors(v);
      if (next.count() < t) continue;
      chosen.push_back(v);
      run(&next, v + 1);
      chosen.pop_back();
      if (found || exhausted) return;
    }
  }
};

}  // namespace

KttResult find_complete_bipartite(const Graph& g, std::size_t t, SearchBudget budget) {
  if (t < 1) throw std::invalid_argument("find_complete_bipartite: t must be at least 1");
  KttSearch search{g, t, budget.max_nodes, 0, false, {}, std::nullopt};
  search.run(nullptr, 0);
  KttResult result;
  result.nodes = search.nodes;
  if (search.found) {
    result.status = SearchStatus::kFound;
    result.witness = std::move(*search.found);
  } else {
    result.status = search.exhausted ? SearchStatus::kInconclusive : SearchStatus::kNone;
  }
  return result;
}

PatternGraph PatternGraph::h0() { return {3, {{0, 1}, {1, 2}}}; }
PatternGraph PatternGraph::h1() { return {5, {{0, 4}, {1, 3}, {2, 4}}}; }

std::optional<std::vector<Vertex>> find_ordered_pattern(const OrderedGraph& g, const PatternGraph& pattern) {
  const std::size_t k = pattern.k;
  const std::size_t n = g.size();
  if (k == 0) return std::vector<Vertex>{};
  if (k > n) return std::nullopt;
  std::vector<std::vector<Vertex>> back(k);
  std::vector<std::size_t> forward_span(k, 0);
  for (const auto& [a, b] : pattern.edges) {
    const auto [lo, hi] = make_edge(a, b);
    if (hi >= k || lo == hi) throw std::invalid_argument("pattern edge out of range");
    back[hi].push_back(lo);
    forward_span[lo] = std::max(forward_span[lo], hi - lo);
  }

  std::vector<Vertex> image(k);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    const Vertex lo = i == 0 ? 0 : image[i - 1] + 1;
    for (Vertex x = lo; x + (k - i) <= n; ++x) {
      bool ok = true;
      for (Vertex j : back[i]) {
        if (!g.adjacent(image[j], x)) {
          ok = false;
          break;
        }
      }
      // A later pattern neighbour needs a graph neighbour far enough right.
      if (ok && forward_span[i] > 0) {
        const auto& nb = g.neighbors(x);
        Vertex last = VertexSet::npos;
        for (auto w = nb.find_next(x); w != VertexSet::npos; w = nb.find_next(w)) last = w;
        ok = last != VertexSet::npos && last >= x + forward_span[i];
      }
      if (!ok) continue;
      image[i] = x;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (place(place, 0)) return image;
  return std::nullopt;
}

namespace {

struct CliqueSearch {
  const std::vector<VertexSet>& adj;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  std::size_t colour_bound(const VertexSet& p) const {
    VertexSet rest = p;
    std::size_t colours = 0;
    while (rest.any()) {
      ++colours;
      VertexSet avail = rest;
      for (auto v = avail.find_first(); v != VertexSet::npos; v = avail.find_next(v)) {
        rest.reset(v);
        avail -= adj[v];
      }
    }
    return colours;
  }

  void expand(const VertexSet& p) {
    if (exhausted) return;
    if (++nodes > max_nodes) {
      exhausted = true;
      return;
    }
    if (current.size() > best.size()) best = current;
    if (p.none() || current.size() + colour_bound(p) <= best.size()) return;
    std::size_t remaining = p.count();
    for (auto v = p.find_first(); v != VertexSet::npos; v = p.find_next(v), --remaining) {
      if (current.size() + remaining <= best.size()) return;
      VertexSet next = p & adj[v];
      // Only later candidates keep the enumeration lexicographic.
      for (auto w = next.find_first(); w != VertexSet::npos && w <= v; w = next.find_next(w)) next.reset(w);
      current.push_back(v);
      expand(next);
      current.pop_back();
      if (exhausted) return;
    }
  }
};

}  // namespace

CrossingFamily max_pairwise_crossing(const Graph& g, SearchBudget budget) {
  const CrossingIndex index(g);
  const std::size_t m = index.edges().size();
  std::vector<VertexSet> adj(m, VertexSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : index.crossings()[i]) adj[i].set(j);
  }
  CliqueSearch search{adj, budget.max_nodes, 0, false, {}, {}};
  VertexSet all(m);
  all.set();
  search.expand(all);
  CrossingFamily out;
  out.k = search.best.size();
  for (std::size_t e : search.best) out.edges.push_back(index.edges()[e]);
  out.exact = !search.exhausted;
  out.nodes = search.nodes;
  return out;
}

}  // namespace polyvis
