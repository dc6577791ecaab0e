#include "polyvis/generators.hpp"
#include "polyvis/io.hpp"

#include <gtest/gtest.h>

namespace polyvis {
namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(PolygonFormat, ParsesCommentsAndFractions) {
  const auto pts = parse_polygon("# square\npolygon 4\n0 0\n0 1/2 # left\n1 1\n2/2 0\n");
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[1].y, Rational(1, 2));
  EXPECT_EQ(pts[3].x, Rational(1));
}

TEST(PolygonFormat, RoundTrip) {
  for (auto f : {PolygonFamily::kConvex, PolygonFamily::kStar, PolygonFamily::kFan}) {
    const Polygon p = generate_polygon(f, 9, 4);
    const std::string text = format_polygon(p);
    EXPECT_EQ(validate_polygon(parse_polygon(text)), p);
    EXPECT_EQ(format_polygon(parse_polygon(text)), text);
  }
}

TEST(PolygonFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_polygon("polygon 3\n0 0\n1 x\n2 2\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_polygon("polygon 3\n0 0\n1 1\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_polygon("poly 3\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_polygon("polygon 2\n0 0\n1 1/0\n"); }), 3u);
  EXPECT_NE(error_line([] { parse_polygon("polygon 1\n0 0\n5\n"); }), 0u);
}

TEST(GraphFormat, RoundTrip) {
  const Graph g(5, {{0, 4}, {1, 3}, {2, 4}});
  for (auto order : {VertexOrder::kCyclic, VertexOrder::kOrdered}) {
    const std::string text = format_graph(g, order);
    const GraphFile f = parse_graph(text);
    EXPECT_EQ(f.n, 5u);
    EXPECT_EQ(f.order, order);
    EXPECT_EQ(f.edges, g.edges());
  }
  EXPECT_EQ(format_graph(g, VertexOrder::kOrdered), "graph 5 ordered\ne 0 4\ne 1 3\ne 2 4\n");
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(error_line([] { parse_graph("graph 3 cyclic\ne 0 3\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph("graph 3 weird\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_graph("graph 3 ordered\ne 1 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph("graph 3 ordered\nf 0 1\n"); }), 2u);
}

TEST(MatrixFormat, RoundTrip) {
  const BitMatrix m = BitMatrix::from_rows({"0110", "1001", "0000"});
  EXPECT_EQ(format_matrix(m), "matrix 3 4\n0110\n1001\n0000\n");
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_EQ(error_line([] { parse_matrix("matrix 2 2\n01\n012\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_matrix("matrix 2 2\n01\n"); }), 3u);
}

TEST(SequenceFormat, RoundTrip) {
  const DSSequence s{3, {1, 2, 1, 3, 1}};
  EXPECT_EQ(format_sequence(s), "dsseq 3 5\n1 2 1 3 1\n");
  EXPECT_EQ(parse_sequence(format_sequence(s)), s);
  EXPECT_NE(error_line([] { parse_sequence("dsseq 2 3\n1 2\n"); }), 0u);
  EXPECT_NE(error_line([] { parse_sequence("dsseq 2 2\n1 5\n"); }), 0u);
}

TEST(SitesFormat, RoundTrip) {
  const std::vector<BoundarySite> sites{{0, Rational(0)}, {2, Rational(1, 3)}};
  const std::string text = format_sites(sites);
  EXPECT_EQ(text, "sites 2\n0 0\n2 1/3\n");
  EXPECT_EQ(parse_sites(text), sites);
  EXPECT_NE(error_line([] { parse_sites("sites 1\n0\n"); }), 0u);
}

}  // namespace
}  // namespace polyvis
