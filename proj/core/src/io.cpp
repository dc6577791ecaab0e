#include "polyvis/io.hpp"

#include <charconv>
#include <sstream>

namespace polyvis {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) {
    std::size_t line = 1;
    std::string current;
    bool comment = false;
    const auto flush = [&] {
      if (!current.empty()) tokens_.push_back({std::move(current), line});
      current.clear();
    };
    for (char ch : text) {
      if (ch == '\n') {
        flush();
        comment = false;
        ++line;
      } else if (comment) {
      } else if (ch == '#') {
        flush();
        comment = true;
      } else if (ch == ' ' || ch == '\t' || ch == '\r') {
        flush();
      } else {
        current.push_back(ch);
      }
    }
    flush();
    last_line_ = line;
  }

  bool done() const { return pos_ == tokens_.size(); }
  std::size_t line() const { return done() ? last_line_ : tokens_[pos_].line; }

  const Token& next(const char* what) {
    if (done()) throw ParseError(last_line_, std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }

  void expect(std::string_view keyword) {
    const Token& t = next("header");
    if (t.text != keyword) throw ParseError(t.line, "expected '" + std::string(keyword) + "', got '" + t.text + "'");
  }

  std::size_t count(const char* what) {
    const Token& t = next(what);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, std::string("expected non-negative integer for ") + what + ", got '" + t.text + "'");
    }
    return value;
  }

  Rational rational(const char* what) {
    const Token& t = next(what);
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(t.line, std::string("bad ") + what + ": " + e.what());
    }
  }

  void finish() {
    if (!done()) throw ParseError(tokens_[pos_].line, "trailing token '" + tokens_[pos_].text + "'");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
};

}  // namespace

std::vector<Point> parse_polygon(std::string_view text) {
  TokenStream in(text);
  in.expect("polygon");
  const std::size_t n = in.count("vertex count");
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = in.rational("x coordinate");
    Rational y = in.rational("y coordinate");
    points.push_back({std::move(x), std::move(y)});
  }
  in.finish();
  return points;
}

std::string format_polygon(const std::vector<Point>& points) {
  std::ostringstream out;
  out << "polygon " << points.size() << '\n';
  for (const auto& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  return out.str();
}

std::string format_polygon(const Polygon& polygon) { return format_polygon(polygon.vertices()); }

GraphFile parse_graph(std::string_view text) {
  TokenStream in(text);
  in.expect("graph");
  GraphFile g;
  g.n = in.count("vertex count");
  const std::size_t order_line = in.line();
  const std::string order = in.next("order").text;
  if (order == "cyclic") {
    g.order = VertexOrder::kCyclic;
  } else if (order == "ordered") {
    g.order = VertexOrder::kOrdered;
  } else {
    throw ParseError(order_line, "expected 'cyclic' or 'ordered', got '" + order + "'");
  }
  while (!in.done()) {
    in.expect("e");
    const std::size_t line = in.line();
    const std::size_t i = in.count("edge endpoint");
    const std::size_t j = in.count("edge endpoint");
    if (i >= g.n || j >= g.n) throw ParseError(line, "edge endpoint out of range");
    if (i == j) throw ParseError(line, "loop edge");
    g.edges.push_back(make_edge(i, j));
  }
  return g;
}

std::string format_graph(const Graph& g, VertexOrder order) {
  std::ostringstream out;
  out << "graph " << g.size() << ' ' << (order == VertexOrder::kCyclic ? "cyclic" : "ordered") << '\n';
  for (const auto& [i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
  return out.str();
}

BitMatrix parse_matrix(std::string_view text) {
  TokenStream in(text);
  in.expect("matrix");
  const std::size_t r = in.count("row count");
  const std::size_t c = in.count("column count");
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Token& t = in.next("matrix row");
    if (t.text.size() != c) throw ParseError(t.line, "row has " + std::to_string(t.text.size()) + " cells, expected " + std::to_string(c));
    for (std::size_t j = 0; j < c; ++j) {
      if (t.text[j] != '0' && t.text[j] != '1') throw ParseError(t.line, "matrix cell must be 0 or 1");
      m.set(i, j, t.text[j] == '1');
    }
  }
  in.finish();
  return m;
}

std::string format_matrix(const BitMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& row : m.to_rows()) out << row << '\n';
  return out.str();
}

DSSequence parse_sequence(std::string_view text) {
  TokenStream in(text);
  in.expect("dsseq");
  DSSequence seq;
  seq.n = in.count("alphabet size");
  const std::size_t len = in.count("length");
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t line = in.line();
    const std::size_t x = in.count("letter");
    if (x < 1 || x > seq.n) throw ParseError(line, "letter " + std::to_string(x) + " outside 1.." + std::to_string(seq.n));
    seq.letters.push_back(x);
  }
  in.finish();
  return seq;
}

std::string format_sequence(const DSSequence& seq) {
  std::ostringstream out;
  out << "dsseq " << seq.n << ' ' << seq.letters.size() << '\n';
  for (std::size_t i = 0; i < seq.letters.size(); ++i) out << (i ? " " : "") << seq.letters[i];
  out << '\n';
  return out.str();
}

std::vector<BoundarySite> parse_sites(std::string_view text) {
  TokenStream in(text);
  in.expect("sites");
  const std::size_t m = in.count("site count");
  std::vector<BoundarySite> sites;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t edge = in.count("edge index");
    sites.push_back({edge, in.rational("edge parameter")});
  }
  in.finish();
  return sites;
}

std::string format_sites(const std::vector<BoundarySite>& sites) {
  std::ostringstream out;
  out << "sites " << sites.size() << '\n';
  for (const auto& s : sites) out << s.edge_index << ' ' << to_string(s.t) << '\n';
  return out.str();
}

}  // namespace polyvis
