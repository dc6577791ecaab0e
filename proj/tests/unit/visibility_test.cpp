#include "polyvis/generators.hpp"
#include "polyvis/visibility.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace polyvis {
namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

Polygon unit_square() { return validate_polygon({P(0, 0), P(0, 1), P(1, 1), P(1, 0)}); }
Polygon l_shape() { return validate_polygon({P(0, 0), P(0, 2), P(1, 2), P(1, 1), P(2, 1), P(2, 0)}); }

BoundarySite site(std::size_t edge, long num = 0, long den = 1) { return {edge, Rational(num, den)}; }

TEST(ResolveSites, Corners) {
  const auto pts = resolve_sites(unit_square(), {site(0), site(1), site(2), site(3)});
  EXPECT_EQ(pts, unit_square().vertices());
}

TEST(ResolveSites, EdgeMidpoint) {
  const auto pts = resolve_sites(unit_square(), {site(0, 1, 2)});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (Point{Rational(0), Rational(1, 2)}));
}

TEST(ResolveSites, SortsIntoBoundaryOrder) {
  const auto pts = resolve_sites(unit_square(), {site(2, 1, 2), site(0, 1, 3), site(0)});
  EXPECT_EQ(pts, (std::vector<Point>{P(0, 0), {Rational(0), Rational(1, 3)}, {Rational(1), Rational(1, 2)}}));
}

TEST(ResolveSites, Errors) {
  const auto kind_of = [](std::vector<BoundarySite> sites) {
    try {
      resolve_sites(unit_square(), std::move(sites));
    } catch (const SiteError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  EXPECT_EQ(kind_of({site(0), site(0)}), static_cast<int>(SiteError::Kind::kDuplicateSite));
  EXPECT_EQ(kind_of({site(4)}), static_cast<int>(SiteError::Kind::kEdgeIndexOutOfRange));
  EXPECT_EQ(kind_of({site(0, 1, 1)}), static_cast<int>(SiteError::Kind::kParameterOutOfRange));
  EXPECT_EQ(kind_of({site(0, -1, 2)}), static_cast<int>(SiteError::Kind::kParameterOutOfRange));
}

TEST(VertexVisibility, ConvexPentagonIsComplete) {
  const CyclicGraph g = vertex_visibility_graph(convex_polygon(5));
  EXPECT_EQ(g.edge_count(), 10u);
}

TEST(VertexVisibility, FanSixIsATriangulation) {
  const CyclicGraph g = vertex_visibility_graph(fan_polygon(6));
  EXPECT_EQ(g.edge_count(), 9u);
  for (Vertex v = 1; v < 6; ++v) EXPECT_TRUE(g.adjacent(0, v));
  for (Vertex a = 1; a < 6; ++a) {
    for (Vertex b = a + 2; b < 6; ++b) EXPECT_FALSE(g.adjacent(a, b)) << a << "," << b;
  }
}

TEST(VertexVisibility, LShapeMatchesOracle) {
  const Polygon p = l_shape();
  const CyclicGraph g = vertex_visibility_graph(p);
  EXPECT_EQ(oracle::edge_set(g), oracle::visibility_edges(p, p.vertices()));
  // Frozen from the oracle: three pairs are cut off by the notch.
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_FALSE(g.adjacent(1, 4));
  EXPECT_FALSE(g.adjacent(2, 4));
  EXPECT_FALSE(g.adjacent(2, 5));
}

TEST(VertexVisibility, MatchesOracleOnAllFamilies) {
  for (Seed seed = 0; seed < 6; ++seed) {
    for (const Polygon& p : {star_polygon(11, seed), xmonotone_polygon(11, seed), random_simple_polygon(11, seed)}) {
      EXPECT_EQ(oracle::edge_set(vertex_visibility_graph(p)), oracle::visibility_edges(p, p.vertices()))
          << "seed " << seed;
    }
  }
}

TEST(VertexVisibility, ContainsBoundaryCycleAndEnoughEdges) {
  for (Seed seed = 0; seed < 10; ++seed) {
    const Polygon p = random_simple_polygon(14, seed);
    const CyclicGraph g = vertex_visibility_graph(p);
    const std::size_t n = p.size();
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(g.adjacent(v, (v + 1) % n));
    EXPECT_GE(g.edge_count(), 2 * n - 3);
  }
}

TEST(VertexVisibility, RotationGivesRotatedGraph) {
  for (Seed seed = 0; seed < 5; ++seed) {
    const Polygon p = random_simple_polygon(10, seed);
    const std::size_t n = p.size();
    const CyclicGraph g = vertex_visibility_graph(p);
    for (std::size_t shift : {1u, 4u}) {
      std::vector<Point> rotated;
      for (std::size_t i = 0; i < n; ++i) rotated.push_back(p.vertex((i + shift) % n));
      const CyclicGraph h = vertex_visibility_graph(validate_polygon(rotated));
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) EXPECT_EQ(h.adjacent(a, b), g.adjacent((a + shift) % n, (b + shift) % n));
      }
    }
  }
}

TEST(SiteVisibility, SquareWithMidpointsIsComplete) {
  std::vector<BoundarySite> sites;
  for (std::size_t e = 0; e < 4; ++e) {
    sites.push_back(site(e));
    sites.push_back(site(e, 1, 2));
  }
  EXPECT_EQ(site_visibility_graph(unit_square(), sites).edge_count(), 28u);
}

TEST(SiteVisibility, VertexSitesGiveVertexGraph) {
  const Polygon p = fan_polygon(6);
  EXPECT_EQ(site_visibility_graph(p, vertex_sites(p)), vertex_visibility_graph(p));
}

TEST(SiteVisibility, LShapeNotchBlocksLegs) {
  // Midpoints of the top edge of the left leg and the right edge of the
  // bottom leg.
  const Polygon p = l_shape();
  const CyclicGraph g = site_visibility_graph(p, {site(1, 1, 2), site(4, 1, 2)});
  EXPECT_EQ(g.edge_count(), 0u);
  const auto pts = resolve_sites(p, {site(1, 1, 2), site(4, 1, 2)});
  EXPECT_FALSE(oracle::sees(p, pts[0], pts[1]));
}

TEST(SiteVisibility, RandomSitesMatchOracle) {
  std::mt19937_64 rng(3);
  for (Seed seed = 0; seed < 5; ++seed) {
    const Polygon p = random_simple_polygon(8, seed);
    std::vector<BoundarySite> sites = vertex_sites(p);
    std::uniform_int_distribution<std::size_t> edge(0, p.size() - 1);
    std::uniform_int_distribution<long> num(1, 6);
    for (int k = 0; k < 6; ++k) {
      const BoundarySite s{edge(rng), Rational(num(rng), 7)};
      if (std::find(sites.begin(), sites.end(), s) == sites.end()) sites.push_back(s);
    }
    const CyclicGraph g = site_visibility_graph(p, sites);
    const auto pts = resolve_sites(p, sites);
    EXPECT_EQ(oracle::edge_set(g), oracle::visibility_edges(p, pts));
    for (Vertex v = 0; v < pts.size(); ++v) EXPECT_TRUE(g.adjacent(v, (v + 1) % pts.size()));
  }
}

TEST(PointVisibility, SymmetricUnderReversal) {
  const Polygon p = random_simple_polygon(12, 9);
  std::vector<Point> pts = p.vertices();
  const CyclicGraph g = point_visibility_graph(p, pts);
  std::reverse(pts.begin(), pts.end());
  const CyclicGraph h = point_visibility_graph(p, pts);
  const std::size_t n = pts.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b) EXPECT_EQ(g.adjacent(a, b), h.adjacent(n - 1 - a, n - 1 - b));
    }
  }
}

}  // namespace
}  // namespace polyvis
