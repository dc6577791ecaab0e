#include "polyvis/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvis {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SeededRng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

namespace {

void require_size(std::size_t n, std::size_t min, const char* who) {
  if (n < min) throw std::invalid_argument(std::string(who) + ": n must be at least " + std::to_string(min));
}

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct IPoint {
  std::int64_t x, y;
};

std::int64_t icross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int isgn(std::int64_t v) { return (v > 0) - (v < 0); }

// Proper crossing only; inputs have no three collinear points.
bool icrosses(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
  return isgn(icross(a, b, c)) * isgn(icross(a, b, d)) < 0 && isgn(icross(c, d, a)) * isgn(icross(c, d, b)) < 0;
}

// Upper half-plane (y > 0, or y = 0 and x > 0) first, then by cross product.
bool angle_less(const IPoint& a, const IPoint& b) {
  const auto half = [](const IPoint& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

Polygon convex_polygon(std::size_t n) {
  require_size(n, 3, "convex_polygon");
  // (q^2 - p^2, 2pq) / (q^2 + p^2) for p in [-2q, 2q]: an arc of about 254
  // degrees, wide enough for a non-degenerate convex position.
  const long q = static_cast<long>((n - 1 + 3) / 4);
  std::vector<Point> pts;
  for (std::size_t k = n; k-- > 0;) {
    const long p = -2 * q + static_cast<long>(k) * 4 * q / static_cast<long>(n - 1);
    const long den = q * q + p * p;
    pts.push_back({ratio(q * q - p * p, den), ratio(2 * p * q, den)});
  }
  return validate_polygon(std::move(pts));
}

Polygon star_polygon(std::size_t n, Seed seed) {
  require_size(n, 3, "star_polygon");
  SeededRng rng(seed);
  std::vector<IPoint> dirs;
  for (;;) {
    dirs.clear();
    while (dirs.size() < n) {
      const IPoint d{rng.uniform(-100, 100), rng.uniform(-100, 100)};
      if (d.x != 0 || d.y != 0) dirs.push_back(d);
    }
    std::sort(dirs.begin(), dirs.end(), [](const IPoint& a, const IPoint& b) { return angle_less(b, a); });
    // Consecutive directions must turn strictly clockwise by less than pi.
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const IPoint& a = dirs[i];
      const IPoint& b = dirs[(i + 1) % n];
      ok = a.x * b.y - a.y * b.x < 0;
    }
    if (ok) break;
  }
  std::vector<Point> pts;
  for (const auto& d : dirs) {
    const Rational r = ratio(static_cast<long>(rng.uniform(50, 200)), 100);
    pts.push_back({r * static_cast<long>(d.x), r * static_cast<long>(d.y)});
  }
  Polygon poly = validate_polygon(std::move(pts));
  const auto kernel = polygon_kernel(poly);
  if (!kernel || !kernel->contains({Rational(0), Rational(0)})) {
    throw std::logic_error("star_polygon: kernel does not contain the center");
  }
  return poly;
}

Polygon xmonotone_polygon(std::size_t n, Seed seed) {
  require_size(n, 3, "xmonotone_polygon");
  SeededRng rng(seed);
  std::vector<long> xs(n, 0);
  for (std::size_t k = 1; k < n; ++k) xs[k] = xs[k - 1] + static_cast<long>(rng.uniform(1, 4));
  std::vector<Point> upper{{Rational(xs[0]), Rational(0)}};
  std::vector<Point> lower;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const bool up = rng.coin();
    const Rational y = ratio(static_cast<long>(rng.uniform(100, 200)), 100);
    (up ? upper : lower).push_back({Rational(xs[k]), up ? y : Rational(-y)});
  }
  upper.push_back({Rational(xs[n - 1]), Rational(0)});
  upper.insert(upper.end(), lower.rbegin(), lower.rend());
  return validate_polygon(std::move(upper));
}

Polygon random_simple_polygon(std::size_t n, Seed seed) {
  require_size(n, 3, "random_simple_polygon");
  SeededRng rng(seed);
  std::vector<IPoint> pts;
  while (pts.size() < n) {
    const IPoint c{rng.uniform(0, 10'000), rng.uniform(0, 10'000)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = pts[i].x != c.x || pts[i].y != c.y;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = icross(pts[i], pts[j], c) != 0;
    }
    if (ok) pts.push_back(c);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (icrosses(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
          std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i + 1), pts.begin() + static_cast<std::ptrdiff_t>(j + 1));
          changed = true;
        }
      }
    }
  }
  std::vector<Point> out;
  for (const auto& p : pts) out.push_back({Rational(static_cast<long>(p.x)), Rational(static_cast<long>(p.y))});
  return validate_polygon(std::move(out));
}

Polygon fan_polygon(std::size_t n) {
  require_size(n, 4, "fan_polygon");
  const long steps = static_cast<long>(n - 2);
  // With an even step count a chain vertex sits at x = 0; moving the apex
  // half a step keeps all x-coordinates distinct.
  const Rational apex_x = steps % 2 == 0 ? ratio(10, steps) : Rational(0);
  std::vector<Point> pts{{apex_x, Rational(10)}};
  // Clockwise: from the apex down to the right end, then leftwards.
  for (long k = steps; k >= 0; --k) {
    const Rational x = ratio(-10 * steps + 20 * k, steps);
    pts.push_back({x, Rational(-x * x / 100)});
  }
  return validate_polygon(std::move(pts));
}

std::string_view to_string(PolygonFamily f) {
  switch (f) {
    case PolygonFamily::kConvex: return "convex";
    case PolygonFamily::kStar: return "star";
    case PolygonFamily::kXMonotone: return "xmonotone";
    case PolygonFamily::kRandom: return "random";
    case PolygonFamily::kFan: return "fan";
  }
  return "?";
}

std::optional<PolygonFamily> parse_family(std::string_view name) {
  for (auto f : {PolygonFamily::kConvex, PolygonFamily::kStar, PolygonFamily::kXMonotone, PolygonFamily::kRandom,
                 PolygonFamily::kFan}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Polygon generate_polygon(PolygonFamily family, std::size_t n, Seed seed) {
  switch (family) {
    case PolygonFamily::kConvex: return convex_polygon(n);
    case PolygonFamily::kStar: return star_polygon(n, seed);
    case PolygonFamily::kXMonotone: return xmonotone_polygon(n, seed);
    case PolygonFamily::kRandom: return random_simple_polygon(n, seed);
    case PolygonFamily::kFan: return fan_polygon(n);
  }
  throw std::invalid_argument("generate_polygon: unknown family");
}

}  // namespace polyvis
