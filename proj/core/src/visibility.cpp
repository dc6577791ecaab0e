#include "polyvis/visibility.hpp"

#include <algorithm>
#include <string>

namespace polyvis {

std::vector<BoundarySite> sort_sites(const Polygon& polygon, std::vector<BoundarySite> sites) {
  for (const auto& s : sites) {
    if (s.edge_index >= polygon.size()) {
      throw SiteError(SiteError::Kind::kEdgeIndexOutOfRange,
                      "site edge index " + std::to_string(s.edge_index) + " out of range");
    }
    if (sgn(s.t) < 0 || s.t >= 1) {
      throw SiteError(SiteError::Kind::kParameterOutOfRange, "site parameter " + to_string(s.t) + " not in [0,1)");
    }
  }
  std::sort(sites.begin(), sites.end());
  const auto dup = std::adjacent_find(sites.begin(), sites.end());
  if (dup != sites.end()) {
    throw SiteError(SiteError::Kind::kDuplicateSite, "duplicate site on edge " + std::to_string(dup->edge_index) +
                                                         " at t=" + to_string(dup->t));
  }
  return sites;
}

std::vector<Point> resolve_sites(const Polygon& polygon, std::vector<BoundarySite> sites) {
  sites = sort_sites(polygon, std::move(sites));
  std::vector<Point> points;
  points.reserve(sites.size());
  for (const auto& s : sites) {
    const Point& a = polygon.vertex(s.edge_index);
    const Point& b = polygon.next(s.edge_index);
    points.push_back({a.x + s.t * (b.x - a.x), a.y + s.t * (b.y - a.y)});
  }
  return points;
}

std::vector<BoundarySite> vertex_sites(const Polygon& polygon) {
  std::vector<BoundarySite> sites;
  for (std::size_t i = 0; i < polygon.size(); ++i) sites.push_back({i, Rational(0)});
  return sites;
}

CyclicGraph point_visibility_graph(const Polygon& polygon, const std::vector<Point>& points) {
  const std::size_t m = points.size();
  CyclicGraph g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (segment_avoids_exterior(polygon, points[i], points[j])) g.add_edge(i, j);
    }
  }
  return g;
}

CyclicGraph vertex_visibility_graph(const Polygon& polygon) {
  return point_visibility_graph(polygon, polygon.vertices());
}

CyclicGraph site_visibility_graph(const Polygon& polygon, std::vector<BoundarySite> sites) {
  return point_visibility_graph(polygon, resolve_sites(polygon, std::move(sites)));
}

}  // namespace polyvis
