#include "polyvis/audits.hpp"

#include "polyvis/ds_lowerbound.hpp"
#include "polyvis/matrix.hpp"
#include "polyvis/ordered_graphs.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

namespace polyvis {

using nlohmann::json;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kViolation: return "VIOLATION";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

json AuditReport::to_json() const {
  json j{{"audit", audit}, {"instance", instance}, {"verdict", to_string(verdict)},
         {"witness", witness}, {"counters", counters}};
  if (!note.empty()) j["note"] = note;
  return j;
}

namespace {

json edge_json(Edge e) { return json::array({e.first, e.second}); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back(edge_json(e));
  return out;
}

// Violations win over inconclusive results, which win over passes.
void merge_verdict(Verdict& into, Verdict part) {
  if (into == Verdict::kViolation || part == Verdict::kViolation) {
    into = Verdict::kViolation;
  } else if (into == Verdict::kInconclusive || part == Verdict::kInconclusive) {
    into = Verdict::kInconclusive;
  }
}

json instance_json(const Polygon& polygon) { return json{{"n", polygon.size()}}; }

}  // namespace

AuditReport check_k4_theorem(const Polygon& polygon) {
  AuditReport report;
  report.audit = "k4";
  report.instance = instance_json(polygon);
  const CyclicGraph g = vertex_visibility_graph(polygon);
  const std::size_t n = g.size();
  const auto edges = g.edges();
  const std::size_t bound = 2 * n - 3;

  std::optional<std::tuple<Rational, std::array<Vertex, 4>>> best;
  std::size_t crossing_pairs = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges_cross(edges[i], edges[j])) continue;
      ++crossing_pairs;
      std::array<Vertex, 4> q{edges[i].first, edges[i].second, edges[j].first, edges[j].second};
      std::sort(q.begin(), q.end());
      Rational area2 = signed_area2({polygon.vertex(q[0]), polygon.vertex(q[1]), polygon.vertex(q[2]), polygon.vertex(q[3])});
      area2 = abs(area2);
      if (!best || std::tie(area2, q) < std::tie(std::get<0>(*best), std::get<1>(*best))) best.emplace(area2, q);
    }
  }
  report.counters = {{"edges", edges.size()}, {"bound2n3", bound}, {"crossing_pairs", crossing_pairs}};

  if (!best) {
    if (edges.size() > bound) {
      report.verdict = Verdict::kViolation;
      report.witness = {{"edges", edges_json(edges)}};
      report.note = "more than 2n-3 edges without a crossing pair";
    } else {
      report.note = "no crossing edges required";
    }
    return report;
  }

  const auto& [area2, q] = *best;
  json failing = json::array();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (!segment_avoids_exterior(polygon, polygon.vertex(q[a]), polygon.vertex(q[b]))) {
        failing.push_back(json::array({q[a], q[b]}));
      }
    }
  }
  report.witness = {{"k4", json::array({q[0], q[1], q[2], q[3]})},
                    {"crossing", json::array({json::array({q[0], q[2]}), json::array({q[1], q[3]})})},
                    {"area2", to_string(area2)}};
  if (!failing.empty()) {
    report.verdict = Verdict::kViolation;
    report.witness["failing_pairs"] = failing;
  }
  return report;
}

std::optional<Vertex> find_common_watcher(const Polygon& polygon, const CyclicGraph& visibility,
                                          const std::vector<Vertex>& r, const std::vector<Vertex>& c) {
  const std::size_t n = polygon.size();
  const std::size_t k = r.size();
  if (k == 0 || c.size() != 2 * k) {
    throw PreconditionViolated("find_common_watcher: need k >= 1 watchers-to-be and 2k corners");
  }
  if (visibility.size() != n) throw PreconditionViolated("find_common_watcher: graph does not match polygon");
  std::vector<Vertex> all(r);
  all.insert(all.end(), c.begin(), c.end());
  for (Vertex v : all) {
    if (v >= n) throw PreconditionViolated("find_common_watcher: vertex " + std::to_string(v) + " out of range");
  }
  std::size_t descents = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Vertex a = all[i];
    const Vertex b = all[(i + 1) % all.size()];
    if (a == b) throw PreconditionViolated("find_common_watcher: repeated vertex " + std::to_string(a));
    if (a > b) ++descents;
  }
  if (descents != 1) throw PreconditionViolated("find_common_watcher: vertices are not in clockwise order");
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex target : {c[i], c[i + k]}) {
      if (!visibility.adjacent(r[i], target)) {
        throw PreconditionViolated("find_common_watcher: " + std::to_string(r[i]) + " does not see " +
                                   std::to_string(target));
      }
    }
  }
  for (Vertex v = c[k - 1];; v = (v + 1) % n) {
    const bool sees_all = std::all_of(r.begin(), r.end(), [&](Vertex x) { return visibility.adjacent(v, x); });
    if (sees_all) return v;
    if (v == c[k]) break;
  }
  return std::nullopt;
}

std::optional<Vertex> find_common_watcher(const Polygon& polygon, const std::vector<Vertex>& r,
                                          const std::vector<Vertex>& c) {
  return find_common_watcher(polygon, vertex_visibility_graph(polygon), r, c);
}

AuditReport audit_double_cherry(const Polygon& polygon, const std::optional<std::vector<BoundarySite>>& sites) {
  AuditReport report;
  report.audit = "double_cherry";
  report.instance = instance_json(polygon);
  const CyclicGraph g = sites ? site_visibility_graph(polygon, *sites) : vertex_visibility_graph(polygon);
  const std::size_t n = g.size();
  const CrossingIndex index(g);
  std::vector<VertexSet> reach;
  for (Vertex u = 0; u < n; ++u) reach.push_back(index.reachable_from(u, VertexOrder::kCyclic));

  json violations = json::array();
  std::size_t checked = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      ++checked;
      const bool cherry = is_double_cherry(g, u, v);
      const bool both = reach[u][v] && reach[v][u];
      if (cherry || both) {
        violations.push_back({{"pair", json::array({u, v})}, {"double_cherry", cherry}, {"crossing_sequences", both}});
      }
    }
  }
  report.counters = {{"vertices", n}, {"edges", g.edge_count()}, {"non_adjacent_pairs", checked}};
  report.witness = {{"violations", violations}};
  if (!violations.empty()) report.verdict = Verdict::kViolation;
  if (checked == 0) report.note = "complete graph";
  return report;
}

AuditReport capoyleas_pach_audit(const CyclicGraph& g, SearchBudget budget) {
  AuditReport report;
  report.audit = "capoyleas_pach";
  const std::size_t n = g.size();
  report.instance = json{{"n", n}};
  const CrossingFamily family = max_pairwise_crossing(g, budget);
  const long long k = static_cast<long long>(family.k);
  const long long edges = static_cast<long long>(g.edge_count());
  report.counters = {{"edges", edges}, {"k", k}, {"exact", family.exact}, {"nodes", family.nodes}};
  report.witness = {{"crossing_family", edges_json(family.edges)}};
  if (!family.exact) {
    report.verdict = Verdict::kInconclusive;
    report.note = "crossing search budget exhausted; k is a lower bound";
    return report;
  }
  if (n == 0 || 2 * k > static_cast<long long>(n) - 1) {
    report.verdict = Verdict::kNotApplicable;
    report.note = "k > (n-1)/2";
    return report;
  }
  const long long bound = 2 * k * static_cast<long long>(n) - k * (2 * k + 1);
  report.counters["bound"] = bound;
  report.counters["slack"] = bound - edges;
  if (edges > bound) report.verdict = Verdict::kViolation;
  return report;
}

AuditReport star_theorem_audit(const Polygon& polygon, const std::vector<BoundarySite>& sites, std::size_t t,
                               SearchBudget budget) {
  if (t < 1) throw std::invalid_argument("star_theorem_audit: t must be at least 1");
  const auto kernel = polygon_kernel(polygon);
  if (!kernel) throw NotStarShaped("star_theorem_audit: polygon kernel is empty");
  AuditReport report;
  report.audit = "star";
  report.instance = instance_json(polygon);
  report.instance["t"] = t;

  const Point p = kernel->centroid();
  const std::vector<Point> pts = resolve_sites(polygon, sites);
  const CyclicGraph g = point_visibility_graph(polygon, pts);
  const std::size_t m = pts.size();

  std::optional<Rational> max_slope;
  for (const auto& q : pts) {
    if (q.x == p.x) continue;
    const Rational slope = (q.y - p.y) / (q.x - p.x);
    if (!max_slope || slope > *max_slope) max_slope = slope;
  }
  const Rational slope = max_slope ? Rational(*max_slope + 1) : Rational(0);
  std::vector<int> side(m);
  for (std::size_t i = 0; i < m; ++i) side[i] = sgn(pts[i].y - p.y - slope * (pts[i].x - p.x));

  const KttResult ktt = find_complete_bipartite(g, t, budget);
  report.counters = {{"sites", m}, {"edges", g.edge_count()}, {"ktt", to_string(ktt.status)}};
  report.witness = {{"kernel_point", json::array({to_string(p.x), to_string(p.y)})}, {"slope", to_string(slope)}};

  std::size_t cross_edges = 0;
  for (const auto& [a, b] : g.edges()) {
    if (side[a] * side[b] < 0) ++cross_edges;
  }
  report.counters["cross_line_edges"] = cross_edges;

  json halves = json::array();
  for (int s : {1, -1}) {
    std::vector<std::size_t> block;
    std::size_t starts = 0;
    std::size_t first = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (side[i] != s) continue;
      if (side[(i + m - 1) % m] != s) {
        ++starts;
        first = i;
      }
    }
    if (starts > 1) throw std::logic_error("star_theorem_audit: half is not contiguous along the boundary");
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t idx = (first + i) % m;
      if (side[idx] == s) block.push_back(idx);
    }
    const OrderedGraph half = induced_ordered_subgraph(g, block);
    const CrossingIndex index(half);
    const auto& edges = index.edges();
    std::size_t pairs = 0;
    json clause_i = json::array();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (std::size_t f : index.crossings()[e]) {
        if (f < e) continue;
        ++pairs;
        // Name the pair so that a < c < b < d.
        Edge ab = edges[e], cd = edges[f];
        if (cd.first < ab.first) std::swap(ab, cd);
        if (!half.adjacent(ab.first, cd.second)) {
          clause_i.push_back({{"ab", json::array({block[ab.first], block[ab.second]})},
                              {"cd", json::array({block[cd.first], block[cd.second]})}});
        }
      }
    }
    json h{{"side", s > 0 ? "above" : "below"}, {"sites", block.size()}, {"edges", half.edge_count()},
           {"crossing_pairs", pairs}, {"clause_i_failures", clause_i}};
    if (!clause_i.empty()) merge_verdict(report.verdict, Verdict::kViolation);

    if (ktt.status == SearchStatus::kNone) {
      const CrossingFamily cf = max_pairwise_crossing(half, budget);
      h["max_crossing"] = cf.k;
      if (!cf.exact) {
        h["clause_ii"] = "INCONCLUSIVE";
        merge_verdict(report.verdict, Verdict::kInconclusive);
      } else if (cf.k > 2 * t - 1) {
        h["clause_ii"] = "VIOLATION";
        std::vector<Edge> mapped;
        for (const auto& [a, b] : cf.edges) mapped.push_back(make_edge(block[a], block[b]));
        h["crossing_family"] = edges_json(mapped);
        merge_verdict(report.verdict, Verdict::kViolation);
      } else {
        h["clause_ii"] = "PASS";
      }
    } else if (ktt.status == SearchStatus::kFound) {
      h["clause_ii"] = "NOT_APPLICABLE";
    } else {
      h["clause_ii"] = "INCONCLUSIVE";
      merge_verdict(report.verdict, Verdict::kInconclusive);
    }
    halves.push_back(h);
  }
  report.witness["halves"] = halves;
  return report;
}

namespace {

std::optional<MonotoneChains> chains_or_throw(const Polygon& polygon) {
  try {
    auto chains = monotone_chains(polygon);
    if (!chains) throw NotMonotone("polygon is not x-monotone");
    return chains;
  } catch (const PolygonError& e) {
    throw NotMonotone(std::string("polygon is not x-monotone: ") + e.what());
  }
}

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

AuditReport monotone_theorem_audit(const Polygon& polygon, const std::vector<BoundarySite>& sites, std::size_t t,
                                   std::size_t occurrence_cap) {
  if (t < 1) throw std::invalid_argument("monotone_theorem_audit: t must be at least 1");
  const auto chains = chains_or_throw(polygon);
  AuditReport report;
  report.audit = "monotone";
  report.instance = instance_json(polygon);
  report.instance["t"] = t;

  const std::vector<Point> pts = resolve_sites(polygon, sites);
  const CyclicGraph g = point_visibility_graph(polygon, pts);
  const BitMatrix pattern = build_pattern(PatternKind::kMonotoneMt, t);

  json per_chain = json::array();
  for (const auto* chain : {&chains->upper, &chains->lower}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j + 1 < chain->size(); ++j) {
        if (on_segment(polygon.vertex((*chain)[j]), polygon.vertex((*chain)[j + 1]), pts[i])) {
          members.push_back(i);
          break;
        }
      }
    }
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
    const OrderedGraph sub = induced_ordered_subgraph(g, members);
    const BipartiteSplit split = bipartite_split(sub);
    const BitMatrix a = split_adjacency(split, sub);
    const auto left = sorted_copy(split.left);
    const auto right = sorted_copy(split.right);

    std::size_t occurrences = 0;
    json failures = json::array();
    json example;
    for_each_occurrence(
        a, pattern,
        [&](const MatrixOccurrence& occ) {
          ++occurrences;
          std::vector<std::size_t> side_a, side_b;
          for (std::size_t i = 1; i <= t; ++i) side_a.push_back(members[left[occ.rows[i]]]);
          for (std::size_t j = t + 1; j <= 2 * t; ++j) side_b.push_back(members[right[occ.cols[j]]]);
          for (std::size_t x : side_a) {
            for (std::size_t y : side_b) {
              if (!segment_avoids_exterior(polygon, pts[x], pts[y])) failures.push_back(json::array({x, y}));
            }
          }
          if (example.is_null()) example = {{"a", side_a}, {"b", side_b}};
          return true;
        },
        occurrence_cap);
    json c{{"chain", chain == &chains->upper ? "upper" : "lower"}, {"sites", members.size()},
           {"kept_edges", split.kept.size()}, {"occurrences", occurrences},
           {"capped", occurrences >= occurrence_cap}, {"failures", failures}};
    if (!example.is_null()) c["ktt"] = example;
    if (!failures.empty()) report.verdict = Verdict::kViolation;
    per_chain.push_back(c);
  }
  report.witness = {{"chains", per_chain}};
  report.counters = {{"sites", pts.size()}, {"edges", g.edge_count()}};
  return report;
}

AuditReport polygon_mt_audit(const Polygon& polygon, std::size_t t, std::size_t occurrence_cap) {
  if (t < 1) throw std::invalid_argument("polygon_mt_audit: t must be at least 1");
  AuditReport report;
  report.audit = "polygon_mt";
  report.instance = instance_json(polygon);
  report.instance["t"] = t;

  const CyclicGraph g = vertex_visibility_graph(polygon);
  const OrderedGraph ordered = rotate_to_order(g, 0);
  const BipartiteSplit split = bipartite_split(ordered);
  const BitMatrix a = split_adjacency(split, ordered);
  const auto left = sorted_copy(split.left);
  const auto right = sorted_copy(split.right);
  const BitMatrix pattern = plus_extend(build_pattern(PatternKind::kPolygonMt, t));

  std::size_t occurrences = 0;
  json failures = json::array();
  json example;
  for_each_occurrence(
      a, pattern,
      [&](const MatrixOccurrence& occ) {
        ++occurrences;
        std::vector<Vertex> l, r;
        for (std::size_t i = 0; i < t; ++i) l.push_back(left[occ.rows[i]]);
        for (std::size_t j = 0; j < occ.cols.size(); ++j) r.push_back(right[occ.cols[j]]);
        std::vector<Vertex> u;
        for (std::size_t s = 0; s < t; ++s) {
          std::vector<Vertex> c(r.begin() + 1, r.begin() + static_cast<std::ptrdiff_t>(t));
          c.push_back(r[t + 2 * s]);
          c.push_back(r[t + 2 * s + 1]);
          c.insert(c.end(), r.begin() + static_cast<std::ptrdiff_t>(3 * t), r.end());
          try {
            const auto w = find_common_watcher(polygon, g, l, c);
            if (!w) {
              failures.push_back({{"rows", l}, {"corners", c}, {"reason", "no common watcher"}});
              return true;
            }
            u.push_back(*w);
          } catch (const PreconditionViolated& e) {
            failures.push_back({{"rows", l}, {"corners", c}, {"reason", e.what()}});
            return true;
          }
        }
        for (Vertex x : l) {
          for (Vertex y : u) {
            if (!segment_avoids_exterior(polygon, polygon.vertex(x), polygon.vertex(y))) {
              failures.push_back({{"rows", l}, {"watchers", u}, {"pair", json::array({x, y})}});
            }
          }
        }
        if (example.is_null()) example = {{"a", l}, {"b", u}};
        return true;
      },
      occurrence_cap);

  report.counters = {{"edges", g.edge_count()}, {"kept_edges", split.kept.size()}, {"occurrences", occurrences},
                     {"capped", occurrences >= occurrence_cap}};
  report.witness = {{"failures", failures}};
  if (!example.is_null()) report.witness["ktt"] = example;
  if (!failures.empty()) report.verdict = Verdict::kViolation;
  return report;
}

bool contains_k4(const Graph& g, std::vector<Vertex>* witness) {
  for (const auto& [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    for (auto w = common.find_next(v); w != VertexSet::npos; w = common.find_next(w)) {
      const VertexSet last = common & g.neighbors(w);
      const auto x = last.find_next(w);
      if (x != VertexSet::npos) {
        if (witness) *witness = {u, v, w, x};
        return true;
      }
    }
  }
  return false;
}

ReportRow report_instance(PolygonFamily family, std::size_t n, Seed seed, const ReportConfig& config) {
  const Polygon polygon = generate_polygon(family, n, seed);
  const CyclicGraph g = vertex_visibility_graph(polygon);
  ReportRow row{};
  row.family = family;
  row.n = n;
  row.seed = seed;
  row.t = config.t;
  row.edges = g.edge_count();
  row.k4 = contains_k4(g);
  row.ktt = find_complete_bipartite(g, config.t, config.budget).status;
  row.bound_2n3 = 2 * n - 3;
  const CrossingFamily cf = max_pairwise_crossing(g, config.budget);
  row.max_crossing = cf.k;
  row.max_crossing_exact = cf.exact;
  if (cf.exact && 2 * cf.k <= n - 1) {
    const long long k = static_cast<long long>(cf.k);
    row.cp_bound = 2 * k * static_cast<long long>(n) - k * (2 * k + 1);
  }
  row.alpha = inverse_ackermann(n);
  row.e_over_n = static_cast<double>(row.edges) / static_cast<double>(n);
  row.e_over_n_alpha = row.e_over_n / static_cast<double>(row.alpha);

  if (config.audits) {
    row.audits.push_back(check_k4_theorem(polygon));
    row.audits.push_back(audit_double_cherry(polygon));
    row.audits.push_back(capoyleas_pach_audit(g, config.budget));
    if (polygon_kernel(polygon)) {
      row.audits.push_back(star_theorem_audit(polygon, vertex_sites(polygon), config.t, config.budget));
    }
    try {
      row.audits.push_back(monotone_theorem_audit(polygon, vertex_sites(polygon), config.t));
    } catch (const NotMonotone&) {
    }
    row.audits.push_back(polygon_mt_audit(polygon, config.t));
    const json instance{{"family", to_string(family)}, {"n", n}, {"seed", seed}, {"t", config.t}};
    for (auto& a : row.audits) a.instance = instance;
  }
  return row;
}

std::vector<ReportRow> zarankiewicz_report(const ReportConfig& config) {
  const bool seeded = config.family == PolygonFamily::kStar || config.family == PolygonFamily::kXMonotone ||
                      config.family == PolygonFamily::kRandom;
  std::vector<std::pair<std::size_t, Seed>> tasks;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    if (seeded) {
      for (Seed s : config.seeds) tasks.emplace_back(n, s);
    } else {
      tasks.emplace_back(n, config.seeds.empty() ? 0 : config.seeds.front());
    }
  }
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  std::vector<ReportRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = report_instance(config.family, tasks[i].first, tasks[i].second, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_csv_row(const ReportRow& row) {
  char ratios[64];
  std::snprintf(ratios, sizeof ratios, "%.4f,%.4f", row.e_over_n, row.e_over_n_alpha);
  std::string out = std::string(to_string(row.family)) + "," + std::to_string(row.n) + "," + std::to_string(row.seed) +
                    "," + std::to_string(row.t) + "," + std::to_string(row.edges) + "," + (row.k4 ? "1" : "0") + "," +
                    to_string(row.ktt) + "," + std::to_string(row.bound_2n3) + "," +
                    (row.max_crossing_exact ? "" : ">=") + std::to_string(row.max_crossing) + "," +
                    (row.cp_bound ? std::to_string(*row.cp_bound) : "NA") + "," + std::to_string(row.alpha) + "," +
                    ratios;
  return out;
}

}  // namespace polyvis
