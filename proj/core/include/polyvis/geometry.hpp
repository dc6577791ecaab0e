#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyvis {

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den > 0).
using Rational = mpq_class;

/// Parses an integer or `num/den` literal. Throws std::invalid_argument on a
/// malformed literal or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { kClockwise, kCollinear, kCounterClockwise };

enum class IntersectionKind { kDisjoint, kProperCross, kEndpointTouch, kCollinearOverlap };

enum class RegionLocation { kInterior, kBoundary, kExterior };

std::string_view to_string(Orientation o);
std::string_view to_string(IntersectionKind k);
std::string_view to_string(RegionLocation r);

/// (q - p) x (r - p), exactly.
Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff r lies on the closed segment pq.
bool on_segment(const Point& p, const Point& q, const Point& r);

/// Throws std::invalid_argument if either segment is degenerate.
IntersectionKind segment_intersection_kind(const Segment& s1, const Segment& s2);

class PolygonError : public std::invalid_argument {
 public:
  enum class Kind { kFewerThanThreeVertices, kRepeatedVertex, kSelfIntersecting, kDuplicateXCoordinate };

  PolygonError(Kind kind, std::string message, std::size_t first = 0, std::size_t second = 0)
      : std::invalid_argument(std::move(message)), kind_(kind), first_(first), second_(second) {}

  Kind kind() const noexcept { return kind_; }
  /// For kSelfIntersecting: the offending edge pair. For kRepeatedVertex and
  /// kDuplicateXCoordinate: the offending vertex pair.
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  Kind kind_;
  std::size_t first_;
  std::size_t second_;
};

/// Simple polygon with clockwise vertex order. Only constructible through
/// validate_polygon, so every instance satisfies the simplicity invariant.
class Polygon {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const Point& next(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }
  Segment edge(std::size_t i) const { return {vertices_[i], next(i)}; }

  /// Indices i where v[i-1], v[i], v[i+1] are collinear.
  std::vector<std::size_t> collinear_vertices() const;

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  friend Polygon validate_polygon(std::vector<Point> points);
  explicit Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point> vertices_;
};

/// Twice the signed area; negative for clockwise input.
Rational signed_area2(const std::vector<Point>& points);

/// Checks simplicity and normalizes to clockwise order. A counterclockwise
/// input is reversed keeping its first vertex first.
Polygon validate_polygon(std::vector<Point> points);

RegionLocation locate_point(const Polygon& polygon, const Point& p);

/// True iff the closed segment ab lies in the closed polygon. Grazing along
/// or touching the boundary does not block. Throws std::invalid_argument if
/// an endpoint is exterior.
bool segment_avoids_exterior(const Polygon& polygon, const Point& a, const Point& b);

/// Convex region given by its vertices in clockwise order. May be
/// degenerate (a single point or a segment).
struct ConvexRegion {
  std::vector<Point> vertices;

  /// Average of the vertices; lies in the region.
  Point centroid() const;
  /// Closed containment.
  bool contains(const Point& p) const;
};

/// Intersection of the inner closed half-planes of all edges, or nullopt.
std::optional<ConvexRegion> polygon_kernel(const Polygon& polygon);

struct MonotoneChains {
  /// Clockwise from the leftmost to the rightmost vertex.
  std::vector<std::size_t> upper;
  /// Counterclockwise from the leftmost to the rightmost vertex.
  std::vector<std::size_t> lower;
};

/// nullopt when some vertical line meets the boundary more than twice.
/// Throws PolygonError(kDuplicateXCoordinate) when two vertices share x.
std::optional<MonotoneChains> monotone_chains(const Polygon& polygon);

}  // namespace polyvis
