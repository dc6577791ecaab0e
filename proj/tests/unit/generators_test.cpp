#include "polyvis/generators.hpp"
#include "polyvis/io.hpp"
#include "polyvis/visibility.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace polyvis {
namespace {

bool bounded_denominators(const Polygon& p, long limit) {
  for (const auto& v : p.vertices()) {
    if (v.x.get_den() > limit || v.y.get_den() > limit) return false;
  }
  return true;
}

TEST(SeededRng, UniformStaysInRange) {
  SeededRng rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto v = rng.uniform(-3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
  }
  EXPECT_THROW(rng.uniform(2, 1), std::invalid_argument);
}

TEST(SeededRng, PinnedSequence) {
  SeededRng a(42), b(42);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(a.uniform(0, 1'000'000), b.uniform(0, 1'000'000));
}

TEST(ConvexPolygon, CompleteVisibility) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const Polygon p = convex_polygon(n);
    EXPECT_EQ(p.size(), n);
    EXPECT_EQ(vertex_visibility_graph(p).edge_count(), n * (n - 1) / 2);
    EXPECT_TRUE(p.collinear_vertices().empty());
    EXPECT_TRUE(polygon_kernel(p));
  }
  EXPECT_THROW(convex_polygon(2), std::invalid_argument);
}

TEST(StarPolygon, KernelContainsOrigin) {
  for (Seed seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {3u, 8u, 15u}) {
      const Polygon p = star_polygon(n, seed);
      EXPECT_EQ(p.size(), n);
      const auto kernel = polygon_kernel(p);
      ASSERT_TRUE(kernel);
      EXPECT_TRUE(kernel->contains({Rational(0), Rational(0)}));
      EXPECT_TRUE(bounded_denominators(p, 10'000));
    }
  }
  EXPECT_EQ(format_polygon(star_polygon(8, 1)), format_polygon(star_polygon(8, 1)));
  EXPECT_NE(format_polygon(star_polygon(8, 1)), format_polygon(star_polygon(8, 2)));
}

TEST(XMonotonePolygon, ChainsExist) {
  for (Seed seed = 0; seed < 20; ++seed) {
    const Polygon p = xmonotone_polygon(10, seed);
    EXPECT_TRUE(monotone_chains(p));
    EXPECT_TRUE(bounded_denominators(p, 10'000));
  }
  EXPECT_EQ(xmonotone_polygon(4, 0).size(), 4u);
  EXPECT_EQ(xmonotone_polygon(10, 7), xmonotone_polygon(10, 7));
}

TEST(RandomSimplePolygon, ValidAndDeterministic) {
  EXPECT_EQ(random_simple_polygon(20, 3).size(), 20u);
  EXPECT_EQ(random_simple_polygon(3, 0).size(), 3u);
  EXPECT_EQ(random_simple_polygon(20, 3), random_simple_polygon(20, 3));
  for (Seed seed = 0; seed < 10; ++seed) {
    const Polygon p = random_simple_polygon(25, seed);
    EXPECT_EQ(p.size(), 25u);
    EXPECT_TRUE(p.collinear_vertices().empty());
  }
}

TEST(FanPolygon, Triangulation) {
  for (std::size_t n = 4; n <= 16; ++n) {
    const Polygon p = fan_polygon(n);
    const CyclicGraph g = vertex_visibility_graph(p);
    EXPECT_EQ(g.edge_count(), 2 * n - 3) << n;
    EXPECT_TRUE(polygon_kernel(p)) << n;
    EXPECT_TRUE(monotone_chains(p)) << n;
    for (Vertex v = 1; v < n; ++v) EXPECT_TRUE(g.adjacent(0, v));
  }
  EXPECT_FALSE(oracle::has_k4(vertex_visibility_graph(fan_polygon(6))));
  // One reflex chain vertex: a clockwise turn to the left.
  const Polygon four = fan_polygon(4);
  std::size_t reflex = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    reflex += orientation(four.vertex((i + 3) % 4), four.vertex(i), four.next(i)) == Orientation::kCounterClockwise;
  }
  EXPECT_EQ(reflex, 1u);
  EXPECT_THROW(fan_polygon(3), std::invalid_argument);
}

TEST(PolygonFamily, ParseAndDispatch) {
  for (auto f : {PolygonFamily::kConvex, PolygonFamily::kStar, PolygonFamily::kXMonotone, PolygonFamily::kRandom,
                 PolygonFamily::kFan}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_EQ(generate_polygon(f, 6, 2).size(), 6u);
  }
  EXPECT_FALSE(parse_family("spiral"));
}

}  // namespace
}  // namespace polyvis
