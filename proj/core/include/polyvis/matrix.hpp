#pragma once

#include "polyvis/budget.hpp"
#include "polyvis/ordered_graphs.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvis {

/// Dense 0-1 matrix, row-major, 0-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  /// Rows given as strings over {0,1}. Throws std::invalid_argument on
  /// ragged input or other characters.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  static BitMatrix identity(std::size_t t);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { bits_[i * cols_ + j] = value ? 1 : 0; }
  std::size_t ones() const;
  BitMatrix transposed() const;
  std::vector<std::string> to_rows() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Strictly increasing row and column selections of M carrying every 1 of
/// the pattern onto a 1 of M.
struct MatrixOccurrence {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Lexicographically first occurrence (rows first, then columns).
std::optional<MatrixOccurrence> contains_pattern(const BitMatrix& m, const BitMatrix& pattern);

/// Visits one occurrence per feasible row selection, in lexicographic order
/// of rows, each with its first column selection. The visitor returns false
/// to stop. Stops after `limit` occurrences; returns the number visited.
std::size_t for_each_occurrence(const BitMatrix& m, const BitMatrix& pattern,
                                const std::function<bool(const MatrixOccurrence&)>& visit,
                                std::size_t limit = SIZE_MAX);

/// Adds a last row and a first column, with a single 1 where they meet.
BitMatrix plus_extend(const BitMatrix& m);

enum class PatternKind { kIdentity, kPolygonMt, kMonotoneMt };

/// kIdentity: I_t.
/// kPolygonMt: I_t, then t-1 copies of the t x 2 block with 1s at its
/// top-left and bottom-right cells, then I_t again; t x (4t-2).
/// kMonotoneMt: ((I_{2t}^+)^T)^+; (2t+2) x (2t+2).
BitMatrix build_pattern(PatternKind kind, std::size_t t);

/// Row i and column j cross if M[i][j] = 1, or row i has 1s on both sides
/// of column j and column j has 1s on both sides of row i.
bool row_col_cross(const BitMatrix& m, std::size_t i, std::size_t j);

struct RowColumnKtt {
  SearchStatus status = SearchStatus::kNone;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// t rows and t columns that pairwise cross.
RowColumnKtt find_crossing_ktt(const BitMatrix& m, std::size_t t, SearchBudget budget = {});

struct HorizontalSegment {
  std::size_t row;
  std::size_t col_lo;
  std::size_t col_hi;
};

struct VerticalSegment {
  std::size_t col;
  std::size_t row_lo;
  std::size_t row_hi;
};

struct SegmentReduction {
  std::vector<HorizontalSegment> horizontal;
  std::vector<VerticalSegment> vertical;
  /// (row, col) pairs whose segments meet, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> intersecting;
};

/// One horizontal segment per non-empty row spanning its extreme 1-cells
/// and one vertical segment per non-empty column; degenerate allowed.
SegmentReduction matrix_to_segments(const BitMatrix& m);

struct ExtremalResult {
  std::size_t count = 0;
  BitMatrix witness;
  std::uint64_t nodes = 0;
};

/// Maximum number of 1s in an n x n matrix avoiding `pattern`, by
/// row-by-row branch and bound. Throws BudgetExceeded.
ExtremalResult max_ones_avoiding(const BitMatrix& pattern, std::size_t n, SearchBudget budget = {});

class OrderViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |L| x |R| matrix of kept edges, rows and columns in vertex order.
/// Requires every vertex of L to precede every vertex of R, otherwise
/// throws OrderViolation.
BitMatrix bipartite_adjacency(const BipartiteSplit& split, const OrderedGraph& g);

/// Same matrix without the L < R requirement; rows are L in order and
/// columns are R in order.
BitMatrix split_adjacency(const BipartiteSplit& split, const OrderedGraph& g);

}  // namespace polyvis
