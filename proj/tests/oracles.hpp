#pragma once

// Brute-force reference implementations. Each one avoids the data structures
// and search orders of the library routine it checks.

#include "polyvis/ds_lowerbound.hpp"
#include "polyvis/geometry.hpp"
#include "polyvis/graph.hpp"
#include "polyvis/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using polyvis::BitMatrix;
using polyvis::Edge;
using polyvis::Graph;
using polyvis::Point;
using polyvis::Polygon;
using polyvis::Rational;
using polyvis::Vertex;

inline Rational cross3(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Winding number with boundary detection: -1 boundary, 0 exterior, 1 interior.
inline int winding_locate(const Polygon& poly, const Point& p) {
  int winding = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.next(i);
    const Rational c = cross3(a, b, p);
    if (c == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y)) {
      return -1;
    }
    if (a.y <= p.y) {
      if (b.y > p.y && c > 0) ++winding;
    } else {
      if (b.y <= p.y && c < 0) --winding;
    }
  }
  return winding != 0 ? 1 : 0;
}

// Closed segment ab inside the closed polygon: split ab at every parameter
// where it meets the line of a boundary edge within that edge, and probe the
// midpoint of each piece.
inline bool sees(const Polygon& poly, const Point& a, const Point& b) {
  if (a == b) return winding_locate(poly, a) != 0;
  std::vector<Rational> params{Rational(0), Rational(1)};
  const Point d{b.x - a.x, b.y - a.y};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly.vertex(i);
    const Point& q = poly.next(i);
    const Point e{q.x - p.x, q.y - p.y};
    const Rational den = d.x * e.y - d.y * e.x;
    if (den != 0) {
      const Rational s = ((p.x - a.x) * e.y - (p.y - a.y) * e.x) / den;
      const Rational u = ((p.x - a.x) * d.y - (p.y - a.y) * d.x) / den;
      if (s >= 0 && s <= 1 && u >= 0 && u <= 1) params.push_back(s);
    } else {
      // Parallel: project the edge endpoints onto ab.
      const Rational dd = d.x * d.x + d.y * d.y;
      for (const Point* v : {&p, &q}) {
        if (cross3(a, b, *v) != 0) continue;
        const Rational s = ((v->x - a.x) * d.x + (v->y - a.y) * d.y) / dd;
        if (s >= 0 && s <= 1) params.push_back(s);
      }
    }
  }
  std::sort(params.begin(), params.end());
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    if (params[k] == params[k + 1]) continue;
    const Rational mid = (params[k] + params[k + 1]) / 2;
    if (winding_locate(poly, {a.x + mid * d.x, a.y + mid * d.y}) == 0) return false;
  }
  return true;
}

inline std::set<Edge> visibility_edges(const Polygon& poly, const std::vector<Point>& pts) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (sees(poly, pts[i], pts[j])) out.insert({i, j});
    }
  }
  return out;
}

inline std::set<Edge> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

// a < c < b < d for (a,b), (c,d) in either role.
inline bool interleave(Edge e, Edge f) {
  if (e.first > f.first) std::swap(e, f);
  return e.first < f.first && f.first < e.second && e.second < f.second;
}

// All ways of choosing k items from 0..n-1, increasing.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      f(pick);
      return;
    }
    for (std::size_t v = from; v + (k - pos) <= n; ++v) {
      pick[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

inline bool has_ktt(const Graph& g, std::size_t t) {
  bool found = false;
  for_each_subset(g.size(), t, [&](const std::vector<std::size_t>& a) {
    if (found) return;
    for_each_subset(g.size(), t, [&](const std::vector<std::size_t>& b) {
      if (found) return;
      bool ok = true;
      for (auto x : a) {
        for (auto y : b) ok = ok && x != y && g.adjacent(x, y);
      }
      found = ok;
    });
  });
  return found;
}

inline bool has_k4(const Graph& g) {
  bool found = false;
  for_each_subset(g.size(), 4, [&](const std::vector<std::size_t>& s) {
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) ok = ok && g.adjacent(s[i], s[j]);
    }
    found = found || ok;
  });
  return found;
}

// Largest pairwise crossing edge family by enumerating all edge subsets of
// increasing size.
inline std::size_t max_crossing_family(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = edges.empty() ? 0 : 1;
  for (std::size_t k = 2; k <= edges.size(); ++k) {
    bool any = false;
    for_each_subset(edges.size(), k, [&](const std::vector<std::size_t>& s) {
      if (any) return;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (std::size_t j = i + 1; j < k && ok; ++j) ok = interleave(edges[s[i]], edges[s[j]]);
      }
      any = ok;
    });
    if (!any) break;
    best = k;
  }
  return best;
}

// Every 6-tuple u1 < u < u2 < v1 < v < v2 in the linear order `pos`.
inline bool double_cherry_linear(const Graph& g, const std::vector<Vertex>& order, std::size_t iu, std::size_t iv) {
  const auto adj = [&](std::size_t i, std::size_t j) { return g.adjacent(order[i], order[j]); };
  if (adj(iu, iv)) return true;
  for (std::size_t u1 = 0; u1 < iu; ++u1) {
    for (std::size_t u2 = iu + 1; u2 < iv; ++u2) {
      for (std::size_t v1 = u2 + 1; v1 < iv; ++v1) {
        for (std::size_t v2 = iv + 1; v2 < order.size(); ++v2) {
          if (adj(iu, v1) && adj(iu, v2) && adj(iv, u1) && adj(iv, u2)) return true;
        }
      }
    }
  }
  return false;
}

// Every 6-tuple reading u1, u, u2, v1, v, v2 clockwise around the cycle.
inline bool double_cherry_cyclic(const Graph& g, Vertex u, Vertex v) {
  if (g.adjacent(u, v)) return true;
  const std::size_t n = g.size();
  const auto offset = [&](Vertex from, Vertex to) { return (to + n - from) % n; };
  for (Vertex u1 = 0; u1 < n; ++u1) {
    for (Vertex u2 = 0; u2 < n; ++u2) {
      for (Vertex v1 = 0; v1 < n; ++v1) {
        for (Vertex v2 = 0; v2 < n; ++v2) {
          const std::vector<Vertex> seq{u1, u, u2, v1, v, v2};
          bool ordered = true;
          for (std::size_t k = 1; k < seq.size(); ++k) {
            ordered = ordered && offset(u1, seq[k - 1]) < offset(u1, seq[k]);
          }
          if (ordered && g.adjacent(u, v1) && g.adjacent(u, v2) && g.adjacent(v, u1) && g.adjacent(v, u2)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

// Depth-first search over explicit edge paths. `rank` gives each vertex its
// position in the linear order used.
inline bool crossing_path(const std::vector<Edge>& edges, const std::vector<std::size_t>& rank, Vertex u, Vertex v) {
  const auto lo = [&](const Edge& e) { return std::min(rank[e.first], rank[e.second]); };
  const auto hi = [&](const Edge& e) { return std::max(rank[e.first], rank[e.second]); };
  const auto follows = [&](const Edge& e, const Edge& f) {
    return lo(e) < lo(f) && lo(f) < hi(e) && hi(e) < hi(f);
  };
  std::vector<bool> used(edges.size(), false);
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    if (hi(edges[i]) == rank[v]) return true;
    used[i] = true;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!used[j] && follows(edges[i], edges[j]) && dfs(j)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::fill(used.begin(), used.end(), false);
    if (lo(edges[i]) == rank[u] && dfs(i)) return true;
  }
  return false;
}

inline bool matrix_contains(const BitMatrix& m, const BitMatrix& p) {
  if (p.rows() > m.rows() || p.cols() > m.cols()) return false;
  bool found = false;
  for_each_subset(m.rows(), p.rows(), [&](const std::vector<std::size_t>& rows) {
    if (found) return;
    for_each_subset(m.cols(), p.cols(), [&](const std::vector<std::size_t>& cols) {
      if (found) return;
      bool ok = true;
      for (std::size_t i = 0; i < p.rows() && ok; ++i) {
        for (std::size_t j = 0; j < p.cols() && ok; ++j) ok = !p.at(i, j) || m.at(rows[i], cols[j]);
      }
      found = ok;
    });
  });
  return found;
}

inline BitMatrix from_mask(std::size_t n, std::uint64_t mask) {
  BitMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m.set(k / n, k % n, ((mask >> k) & 1) != 0);
  return m;
}

// Maximum ones over every n x n matrix avoiding p.
inline std::size_t extremal(const BitMatrix& p, std::size_t n) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    const auto ones = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (ones <= best) continue;
    if (!matrix_contains(from_mask(n, mask), p)) best = ones;
  }
  return best;
}

inline bool cross_definition(const BitMatrix& m, std::size_t i, std::size_t j) {
  if (m.at(i, j)) return true;
  bool left = false, right = false, up = false, down = false;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(i, c) && c < j) left = true;
    if (m.at(i, c) && c > j) right = true;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.at(r, j) && r < i) up = true;
    if (m.at(r, j) && r > i) down = true;
  }
  return left && right && up && down;
}

// Violation iff some subsequence repeats or two letters alternate s+2 times.
inline bool is_ds(const std::vector<std::size_t>& seq, std::size_t s) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1]) return false;
  }
  std::set<std::size_t> letters(seq.begin(), seq.end());
  for (auto a : letters) {
    for (auto b : letters) {
      if (a == b) continue;
      std::size_t len = 0;
      for (auto x : seq) {
        if (x == (len % 2 == 0 ? a : b)) ++len;
      }
      if (len >= s + 2) return false;
    }
  }
  return true;
}

// Longest DS sequence over 1..n: breadth-first over every valid prefix,
// without canonical letter order.
inline std::size_t lambda(std::size_t s, std::size_t n) {
  std::vector<std::vector<std::size_t>> layer{{}};
  std::size_t best = 0;
  while (!layer.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : layer) {
      for (std::size_t a = 1; a <= n; ++a) {
        auto ext = seq;
        ext.push_back(a);
        if (is_ds(ext, s)) next.push_back(std::move(ext));
      }
    }
    if (!next.empty()) best = next.front().size();
    layer = std::move(next);
  }
  return best;
}

// Depth-first over prefixes where each new letter is the smallest unused
// one; letter renaming preserves the DS property.
inline std::size_t lambda_canonical(std::size_t s, std::size_t n) {
  std::vector<std::size_t> seq;
  std::size_t best = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t used) {
    best = std::max(best, seq.size());
    for (std::size_t a = 1; a <= std::min(n, used + 1); ++a) {
      seq.push_back(a);
      if (is_ds(seq, s)) dfs(std::max(used, a));
      seq.pop_back();
    }
  };
  dfs(0);
  return best;
}

// Rebuilds the Walczak graph from its definition: cut after every leftmost
// or rightmost appearance, then link each inner occurrence to the cut.
inline std::set<Edge> walczak_edges(const std::vector<std::size_t>& letters) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> span;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto [it, fresh] = span.try_emplace(letters[i], i, i);
    if (!fresh) it->second.second = i;
  }
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& [first, last] = span[letters[i]];
    if (i == first || i == last) cuts.push_back(i);
  }
  std::map<std::size_t, Vertex> left_vertex;
  for (Vertex v = 0; v < cuts.size(); ++v) {
    if (cuts[v] == span[letters[cuts[v]]].first) left_vertex[letters[cuts[v]]] = v;
  }
  std::set<Edge> edges;
  std::size_t start = 0;
  for (Vertex v = 0; v < cuts.size(); ++v) {
    for (std::size_t i = start; i < cuts[v]; ++i) edges.insert(polyvis::make_edge(left_vertex.at(letters[i]), v));
    start = cuts[v] + 1;
  }
  return edges;
}

// Some increasing k-subset of g's vertices carries every pattern edge.
inline bool has_ordered_pattern(const Graph& g, std::size_t k, const std::vector<Edge>& pattern) {
  bool found = false;
  for_each_subset(g.size(), k, [&](const std::vector<std::size_t>& pick) {
    if (found) return;
    found = std::all_of(pattern.begin(), pattern.end(),
                        [&](const Edge& e) { return g.adjacent(pick[e.first], pick[e.second]); });
  });
  return found;
}

inline std::uint64_t ackermann(std::size_t i, std::uint64_t j, std::uint64_t cap) {
  if (i == 1) return std::min(cap, 2 * j);
  if (j == 1) return 2;
  const std::uint64_t inner = ackermann(i, j - 1, cap);
  return inner >= cap ? cap : ackermann(i - 1, inner, cap);
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution coin(density);
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, coin(rng));
  }
  return m;
}

inline polyvis::OrderedGraph random_ordered_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  polyvis::OrderedGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace oracle
