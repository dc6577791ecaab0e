#include "polyvis/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace polyvis {

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix row " + std::to_string(i));
    for (std::size_t j = 0; j < c; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(i, j, ch == '1');
    }
  }
  return m;
}

BitMatrix BitMatrix::identity(std::size_t t) {
  BitMatrix m(t, t);
  for (std::size_t i = 0; i < t; ++i) m.set(i, i);
  return m;
}

std::size_t BitMatrix::ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j)) out[i][j] = '1';
  return out;
}

namespace {

class OccurrenceSearch {
 public:
  OccurrenceSearch(const BitMatrix& m, const BitMatrix& p) : m_(m), p_(p), col_ones_(p.cols()) {
    for (std::size_t c = 0; c < p.cols(); ++c)
      for (std::size_t r = 0; r < p.rows(); ++r)
        if (p.at(r, c)) col_ones_[c].push_back(r);
    row_map_.resize(p.rows());
  }

  // Calls `visit` on complete occurrences; returns false when asked to stop.
  template <typename Visit>
  bool run(Visit&& visit) {
    if (p_.rows() > m_.rows() || p_.cols() > m_.cols()) return true;
    return assign(0, visit);
  }

 private:
  // Earliest column selection using only pattern rows < depth.
  bool greedy_columns(std::size_t depth, std::vector<std::size_t>* cols) const {
    std::size_t next = 0;
    if (cols) cols->clear();
    for (std::size_t c = 0; c < p_.cols(); ++c) {
      bool placed = false;
      for (; next + (p_.cols() - c) <= m_.cols(); ++next) {
        bool ok = true;
        for (std::size_t r : col_ones_[c]) {
          if (r < depth && !m_.at(row_map_[r], next)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          if (cols) cols->push_back(next);
          ++next;
          placed = true;
          break;
        }
      }
      if (!placed) return false;
    }
    return true;
  }

  template <typename Visit>
  bool assign(std::size_t depth, Visit& visit) {
    if (depth == p_.rows()) {
      MatrixOccurrence occ;
      occ.rows = row_map_;
      if (!greedy_columns(depth, &occ.cols)) return true;
      return visit(occ);
    }
    const std::size_t lo = depth == 0 ? 0 : row_map_[depth - 1] + 1;
    for (std::size_t x = lo; x + (p_.rows() - depth) <= m_.rows(); ++x) {
      row_map_[depth] = x;
      if (!greedy_columns(depth + 1, nullptr)) continue;
      if (!assign(depth + 1, visit)) return false;
    }
    return true;
  }

  const BitMatrix& m_;
  const BitMatrix& p_;
  std::vector<std::vector<std::size_t>> col_ones_;
  std::vector<std::size_t> row_map_;
};

}  // namespace

std::optional<MatrixOccurrence> contains_pattern(const BitMatrix& m, const BitMatrix& pattern) {
  std::optional<MatrixOccurrence> found;
  OccurrenceSearch(m, pattern).run([&](const MatrixOccurrence& occ) {
    found = occ;
    return false;
  });
  return found;
}

std::size_t for_each_occurrence(const BitMatrix& m, const BitMatrix& pattern,
                                const std::function<bool(const MatrixOccurrence&)>& visit, std::size_t limit) {
  std::size_t count = 0;
  if (limit == 0) return 0;
  OccurrenceSearch(m, pattern).run([&](const MatrixOccurrence& occ) {
    ++count;
    return visit(occ) && count < limit;
  });
  return count;
}

BitMatrix plus_extend(const BitMatrix& m) {
  BitMatrix out(m.rows() + 1, m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j + 1, m.at(i, j));
  out.set(m.rows(), 0);
  return out;
}

BitMatrix build_pattern(PatternKind kind, std::size_t t) {
  if (t < 1) throw std::invalid_argument("build_pattern: t must be at least 1");
  switch (kind) {
    case PatternKind::kIdentity:
      return BitMatrix::identity(t);
    case PatternKind::kPolygonMt: {
      BitMatrix m(t, 4 * t - 2);
      for (std::size_t i = 0; i < t; ++i) m.set(i, i);
      for (std::size_t block = 0; block + 1 < t; ++block) {
        const std::size_t c = t + 2 * block;
        m.set(0, c);
        m.set(t - 1, c + 1);
      }
      const std::size_t tail = 3 * t - 2;
      for (std::size_t i = 0; i < t; ++i) m.set(i, tail + i);
      return m;
    }
    case PatternKind::kMonotoneMt:
      return plus_extend(plus_extend(BitMatrix::identity(2 * t)).transposed());
  }
  throw std::invalid_argument("unknown pattern kind");
}

bool row_col_cross(const BitMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.rows() || j >= m.cols()) throw std::out_of_range("row_col_cross: index out of range");
  if (m.at(i, j)) return true;
  auto any_row = [&](std::size_t from, std::size_t to) {
    for (std::size_t c = from; c < to; ++c)
      if (m.at(i, c)) return true;
    return false;
  };
  auto any_col = [&](std::size_t from, std::size_t to) {
    for (std::size_t r = from; r < to; ++r)
      if (m.at(r, j)) return true;
    return false;
  };
  return any_row(0, j) && any_row(j + 1, m.cols()) && any_col(0, i) && any_col(i + 1, m.rows());
}

RowColumnKtt find_crossing_ktt(const BitMatrix& m, std::size_t t, SearchBudget budget) {
  if (t < 1) throw std::invalid_argument("find_crossing_ktt: t must be at least 1");
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::vector<VertexSet> crosses(r, VertexSet(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) crosses[i][j] = row_col_cross(m, i, j);

  RowColumnKtt result;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, const VertexSet* common, std::size_t start) -> bool {
    if (++nodes > budget.max_nodes) {
      exhausted = true;
      return false;
    }
    if (chosen.size() == t) {
      result.rows = chosen;
      for (auto j = common->find_first(); result.cols.size() < t; j = common->find_next(j)) result.cols.push_back(j);
      return true;
    }
    for (std::size_t i = start; i + (t - chosen.size()) <= r; ++i) {
      VertexSet next = common ? (*common & crosses[i]) : crosses[i];
      if (next.count() < t) continue;
      chosen.push_back(i);
      if (self(self, &next, i + 1)) return true;
      chosen.pop_back();
      if (exhausted) return false;
    }
    return false;
  };
  if (dfs(dfs, nullptr, 0)) {
    result.status = SearchStatus::kFound;
  } else {
    result.status = exhausted ? SearchStatus::kInconclusive : SearchStatus::kNone;
  }
  return result;
}

SegmentReduction matrix_to_segments(const BitMatrix& m) {
  SegmentReduction out;
  std::vector<std::optional<HorizontalSegment>> by_row(m.rows());
  std::vector<std::optional<VerticalSegment>> by_col(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j)) continue;
      if (!by_row[i]) by_row[i] = HorizontalSegment{i, j, j};
      by_row[i]->col_hi = j;
      if (!by_col[j]) by_col[j] = VerticalSegment{j, i, i};
      by_col[j]->row_hi = i;
    }
  }
  for (auto& h : by_row)
    if (h) out.horizontal.push_back(*h);
  for (auto& v : by_col)
    if (v) out.vertical.push_back(*v);
  for (const auto& h : out.horizontal) {
    for (const auto& v : out.vertical) {
      if (h.col_lo <= v.col && v.col <= h.col_hi && v.row_lo <= h.row && h.row <= v.row_hi) {
        out.intersecting.emplace_back(h.row, v.col);
      }
    }
  }
  return out;
}

ExtremalResult max_ones_avoiding(const BitMatrix& pattern, std::size_t n, SearchBudget budget) {
  if (n > 16) throw std::invalid_argument("max_ones_avoiding: n too large for exhaustive search");
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) > __builtin_popcount(b); });

  ExtremalResult result;
  bool have_best = false;
  std::vector<std::uint32_t> rows;
  auto as_matrix = [&](std::size_t k) {
    BitMatrix m(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, (rows[i] >> j) & 1u);
    return m;
  };

  auto dfs = [&](auto&& self, std::size_t ones) -> void {
    if (++result.nodes > budget.max_nodes) {
      throw BudgetExceeded("max_ones_avoiding: node budget of " + std::to_string(budget.max_nodes) + " exhausted");
    }
    if (rows.size() == n) {
      if (!have_best || ones > result.count) {
        have_best = true;
        result.count = ones;
        result.witness = as_matrix(n);
      }
      return;
    }
    for (std::uint32_t mask : masks) {
      const std::size_t bits = static_cast<std::size_t>(__builtin_popcount(mask));
      // Masks are sorted by popcount, so later ones cannot do better either.
      if (have_best && ones + bits + (n - rows.size() - 1) * n <= result.count) return;
      rows.push_back(mask);
      if (!contains_pattern(as_matrix(rows.size()), pattern)) self(self, ones + bits);
      rows.pop_back();
    }
  };
  dfs(dfs, 0);
  return result;
}

BitMatrix split_adjacency(const BipartiteSplit& split, const OrderedGraph& g) {
  std::vector<Vertex> left = split.left;
  std::vector<Vertex> right = split.right;
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  BitMatrix m(left.size(), right.size());
  std::vector<std::size_t> row_of(g.size(), SIZE_MAX), col_of(g.size(), SIZE_MAX);
  for (std::size_t i = 0; i < left.size(); ++i) row_of.at(left[i]) = i;
  for (std::size_t j = 0; j < right.size(); ++j) col_of.at(right[j]) = j;
  for (const auto& [a, b] : split.kept) {
    if (!g.adjacent(a, b)) continue;
    if (row_of[a] != SIZE_MAX && col_of[b] != SIZE_MAX) {
      m.set(row_of[a], col_of[b]);
    } else if (row_of[b] != SIZE_MAX && col_of[a] != SIZE_MAX) {
      m.set(row_of[b], col_of[a]);
    }
  }
  return m;
}

BitMatrix bipartite_adjacency(const BipartiteSplit& split, const OrderedGraph& g) {
  if (!split.left.empty() && !split.right.empty()) {
    const Vertex max_left = *std::max_element(split.left.begin(), split.left.end());
    const Vertex min_right = *std::min_element(split.right.begin(), split.right.end());
    if (max_left > min_right) {
      throw OrderViolation("bipartite_adjacency: left vertex " + std::to_string(max_left) +
                           " follows right vertex " + std::to_string(min_right));
    }
  }
  return split_adjacency(split, g);
}

}  // namespace polyvis
