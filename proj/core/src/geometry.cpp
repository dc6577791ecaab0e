#include "polyvis/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polyvis {

Rational parse_rational(std::string_view text) {
  auto fail = [&]() {
    return std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num)) throw fail();
  if (slash != std::string_view::npos) {
    if (!valid_integer(den) || den.front() == '-' || den.front() == '+') throw fail();
  }
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::kClockwise: return "CLOCKWISE";
    case Orientation::kCollinear: return "COLLINEAR";
    case Orientation::kCounterClockwise: return "COUNTERCLOCKWISE";
  }
  return "?";
}

std::string_view to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::kDisjoint: return "DISJOINT";
    case IntersectionKind::kProperCross: return "PROPER_CROSS";
    case IntersectionKind::kEndpointTouch: return "ENDPOINT_TOUCH";
    case IntersectionKind::kCollinearOverlap: return "COLLINEAR_OVERLAP";
  }
  return "?";
}

std::string_view to_string(RegionLocation r) {
  switch (r) {
    case RegionLocation::kInterior: return "INTERIOR";
    case RegionLocation::kBoundary: return "BOUNDARY";
    case RegionLocation::kExterior: return "EXTERIOR";
  }
  return "?";
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const int s = sgn(cross(p, q, r));
  if (s > 0) return Orientation::kCounterClockwise;
  if (s < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  if (sgn(cross(p, q, r)) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

IntersectionKind segment_intersection_kind(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b) {
    throw std::invalid_argument("segment_intersection_kind: degenerate segment");
  }
  const int o1 = sgn(cross(s1.a, s1.b, s2.a));
  const int o2 = sgn(cross(s1.a, s1.b, s2.b));
  const int o3 = sgn(cross(s2.a, s2.b, s1.a));
  const int o4 = sgn(cross(s2.a, s2.b, s1.b));

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare projections on the dominant axis.
    const bool use_x = s1.a.x != s1.b.x;
    auto key = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational lo1 = std::min(key(s1.a), key(s1.b));
    const Rational hi1 = std::max(key(s1.a), key(s1.b));
    const Rational lo2 = std::min(key(s2.a), key(s2.b));
    const Rational hi2 = std::max(key(s2.a), key(s2.b));
    const Rational lo = std::max(lo1, lo2);
    const Rational hi = std::min(hi1, hi2);
    if (lo > hi) return IntersectionKind::kDisjoint;
    if (lo == hi) return IntersectionKind::kEndpointTouch;
    return IntersectionKind::kCollinearOverlap;
  }
  if (o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return IntersectionKind::kEndpointTouch;
    return IntersectionKind::kProperCross;
  }
  return IntersectionKind::kDisjoint;
}

std::vector<std::size_t> Polygon::collinear_vertices() const {
  std::vector<std::size_t> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(cross(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n])) == 0) out.push_back(i);
  }
  return out;
}

Rational signed_area2(const std::vector<Point>& points) {
  Rational sum = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    const Point& q = points[(i + 1) % points.size()];
    sum += p.x * q.y - q.x * p.y;
  }
  return sum;
}

Polygon validate_polygon(std::vector<Point> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw PolygonError(PolygonError::Kind::kFewerThanThreeVertices,
                       "polygon needs at least 3 vertices, got " + std::to_string(n));
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b] || (points[a] == points[b] && a < b);
  });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (points[idx[k]] == points[idx[k + 1]]) {
      throw PolygonError(PolygonError::Kind::kRepeatedVertex,
                         "vertices " + std::to_string(idx[k]) + " and " + std::to_string(idx[k + 1]) +
                             " coincide",
                         idx[k], idx[k + 1]);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei{points[i], points[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment ej{points[j], points[(j + 1) % n]};
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const IntersectionKind kind = segment_intersection_kind(ei, ej);
      const bool bad = adjacent ? kind == IntersectionKind::kCollinearOverlap : kind != IntersectionKind::kDisjoint;
      if (bad) {
        throw PolygonError(PolygonError::Kind::kSelfIntersecting,
                           "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect (" +
                               std::string(to_string(kind)) + ")",
                           i, j);
      }
    }
  }

  if (sgn(signed_area2(points)) > 0) std::reverse(points.begin() + 1, points.end());
  return Polygon(std::move(points));
}

RegionLocation locate_point(const Polygon& polygon, const Point& p) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(polygon.vertex(i), polygon.next(i), p)) return RegionLocation::kBoundary;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon.vertex(i);
    const Point& b = polygon.next(i);
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside ? RegionLocation::kInterior : RegionLocation::kExterior;
}

bool segment_avoids_exterior(const Polygon& polygon, const Point& a, const Point& b) {
  if (locate_point(polygon, a) == RegionLocation::kExterior ||
      locate_point(polygon, b) == RegionLocation::kExterior) {
    throw std::invalid_argument("segment_avoids_exterior: endpoint outside the polygon");
  }
  if (a == b) return true;

  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  const Rational len2 = dx * dx + dy * dy;
  std::vector<Rational> params{Rational(0), Rational(1)};

  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& c = polygon.vertex(i);
    const Point& d = polygon.next(i);
    const Rational ex = d.x - c.x;
    const Rational ey = d.y - c.y;
    const Rational denom = dx * ey - dy * ex;
    const Rational acx = c.x - a.x;
    const Rational acy = c.y - a.y;
    if (sgn(denom) != 0) {
      Rational t = (acx * ey - acy * ex) / denom;
      Rational u = (acx * dy - acy * dx) / denom;
      if (sgn(t) >= 0 && t <= 1 && sgn(u) >= 0 && u <= 1) params.push_back(std::move(t));
    } else if (sgn(acx * dy - acy * dx) == 0) {
      for (const Point* q : {&c, &d}) {
        Rational t = ((q->x - a.x) * dx + (q->y - a.y) * dy) / len2;
        if (sgn(t) > 0 && t < 1) params.push_back(std::move(t));
      }
    }
  }

  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    const Rational mid = (params[k] + params[k + 1]) / 2;
    const Point m{a.x + mid * dx, a.y + mid * dy};
    if (locate_point(polygon, m) == RegionLocation::kExterior) return false;
  }
  return true;
}

Point ConvexRegion::centroid() const {
  Rational sx = 0, sy = 0;
  for (const auto& v : vertices) {
    sx += v.x;
    sy += v.y;
  }
  const Rational k(static_cast<long>(vertices.size()));
  return {sx / k, sy / k};
}

bool ConvexRegion::contains(const Point& p) const {
  if (vertices.empty()) return false;
  if (vertices.size() == 1) return vertices[0] == p;
  if (vertices.size() == 2) return on_segment(vertices[0], vertices[1], p);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    if (orientation(a, b, p) == Orientation::kCounterClockwise) return false;
  }
  return true;
}

namespace {

// Keeps the part of `region` where cross(p, q, .) <= 0.
std::vector<Point> clip_right_of(const std::vector<Point>& region, const Point& p, const Point& q) {
  std::vector<Point> out;
  const std::size_t m = region.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Point& cur = region[j];
    const Point& nxt = region[(j + 1) % m];
    const Rational sc = cross(p, q, cur);
    const Rational sn = cross(p, q, nxt);
    if (sgn(sc) <= 0) out.push_back(cur);
    if ((sgn(sc) < 0 && sgn(sn) > 0) || (sgn(sc) > 0 && sgn(sn) < 0)) {
      const Rational w = sc / (sc - sn);
      out.push_back({cur.x + w * (nxt.x - cur.x), cur.y + w * (nxt.y - cur.y)});
    }
  }
  std::vector<Point> dedup;
  for (auto& pt : out) {
    if (dedup.empty() || dedup.back() != pt) dedup.push_back(std::move(pt));
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace

std::optional<ConvexRegion> polygon_kernel(const Polygon& polygon) {
  const auto& vs = polygon.vertices();
  Rational minx = vs[0].x, maxx = vs[0].x, miny = vs[0].y, maxy = vs[0].y;
  for (const auto& v : vs) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  std::vector<Point> region{{minx, miny}, {minx, maxy}, {maxx, maxy}, {maxx, miny}};
  for (std::size_t i = 0; i < polygon.size() && !region.empty(); ++i) {
    region = clip_right_of(region, polygon.vertex(i), polygon.next(i));
  }
  if (region.empty()) return std::nullopt;
  // Drop vertices that sit in the middle of a straight run.
  if (region.size() > 2) {
    std::vector<Point> pruned;
    const std::size_t m = region.size();
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(cross(region[(j + m - 1) % m], region[j], region[(j + 1) % m])) != 0) pruned.push_back(region[j]);
    }
    if (pruned.size() >= 3) {
      region = std::move(pruned);
    } else {
      // Degenerate segment: keep its two extreme points.
      auto [lo, hi] = std::minmax_element(region.begin(), region.end());
      region = {*lo, *hi};
    }
  }
  return ConvexRegion{std::move(region)};
}

std::optional<MonotoneChains> monotone_chains(const Polygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& xa = polygon.vertex(a).x;
    const auto& xb = polygon.vertex(b).x;
    return xa < xb || (xa == xb && a < b);
  });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (polygon.vertex(idx[k]).x == polygon.vertex(idx[k + 1]).x) {
      throw PolygonError(PolygonError::Kind::kDuplicateXCoordinate,
                         "vertices " + std::to_string(idx[k]) + " and " + std::to_string(idx[k + 1]) +
                             " share an x-coordinate",
                         idx[k], idx[k + 1]);
    }
  }
  const std::size_t left = idx.front();
  const std::size_t right = idx.back();

  auto walk = [&](int step) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> chain{left};
    std::size_t cur = left;
    while (cur != right) {
      const std::size_t nxt = (cur + n + step) % n;
      if (!(polygon.vertex(nxt).x > polygon.vertex(cur).x)) return std::nullopt;
      chain.push_back(nxt);
      cur = nxt;
    }
    return chain;
  };
  auto upper = walk(+1);
  auto lower = walk(-1);
  if (!upper || !lower) return std::nullopt;
  return MonotoneChains{std::move(*upper), std::move(*lower)};
}

}  // namespace polyvis
