#pragma once

#include "polyvis/geometry.hpp"
#include "polyvis/graph.hpp"

#include <stdexcept>
#include <vector>

namespace polyvis {

/// The point vertices[edge_index] + t * (next - current), 0 <= t < 1.
struct BoundarySite {
  std::size_t edge_index = 0;
  Rational t;

  friend bool operator==(const BoundarySite& a, const BoundarySite& b) {
    return a.edge_index == b.edge_index && a.t == b.t;
  }
  friend bool operator<(const BoundarySite& a, const BoundarySite& b) {
    return a.edge_index < b.edge_index || (a.edge_index == b.edge_index && a.t < b.t);
  }
};

class SiteError : public std::invalid_argument {
 public:
  enum class Kind { kDuplicateSite, kEdgeIndexOutOfRange, kParameterOutOfRange };
  SiteError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Sites sorted into clockwise boundary order starting at vertex 0.
std::vector<BoundarySite> sort_sites(const Polygon& polygon, std::vector<BoundarySite> sites);

/// Exact points of the sites, in clockwise boundary order from vertex 0.
std::vector<Point> resolve_sites(const Polygon& polygon, std::vector<BoundarySite> sites);

/// One site per polygon vertex (t = 0 on each edge).
std::vector<BoundarySite> vertex_sites(const Polygon& polygon);

/// Adjacency iff the connecting segment avoids the exterior; vertex i of
/// the graph is polygon vertex i.
CyclicGraph vertex_visibility_graph(const Polygon& polygon);

/// Same rule over resolved site points; graph vertex i is the i-th site in
/// clockwise boundary order.
CyclicGraph site_visibility_graph(const Polygon& polygon, std::vector<BoundarySite> sites);

/// Visibility graph of arbitrary points already in boundary order.
CyclicGraph point_visibility_graph(const Polygon& polygon, const std::vector<Point>& points);

}  // namespace polyvis
