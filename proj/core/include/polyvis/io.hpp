#pragma once

#include "polyvis/ds_lowerbound.hpp"
#include "polyvis/geometry.hpp"
#include "polyvis/graph.hpp"
#include "polyvis/matrix.hpp"
#include "polyvis/visibility.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyvis {

/// Text formats. Tokens are whitespace separated and `#` starts a comment
/// running to the end of the line.
///
///   polygon <n>          then n lines `x y` (integer or num/den)
///   graph <n> <cyclic|ordered>   then one line `e i j` per edge
///   matrix <r> <c>       then r lines of c characters from {0,1}
///   dsseq <n> <length>   then the letters
///   sites <m>            then m lines `edge t`
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unvalidated: the caller decides whether a non-simple polygon is an error.
std::vector<Point> parse_polygon(std::string_view text);
std::string format_polygon(const std::vector<Point>& points);
std::string format_polygon(const Polygon& polygon);

struct GraphFile {
  std::size_t n = 0;
  VertexOrder order = VertexOrder::kCyclic;
  std::vector<Edge> edges;
};

GraphFile parse_graph(std::string_view text);
std::string format_graph(const Graph& g, VertexOrder order);

BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& m);

DSSequence parse_sequence(std::string_view text);
std::string format_sequence(const DSSequence& seq);

std::vector<BoundarySite> parse_sites(std::string_view text);
std::string format_sites(const std::vector<BoundarySite>& sites);

}  // namespace polyvis
