#include "polyvis/ds_lowerbound.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace polyvis {

std::optional<DSViolation> is_davenport_schinzel(const DSSequence& seq, std::size_t s) {
  if (s < 1) throw std::invalid_argument("is_davenport_schinzel: order must be at least 1");
  const auto& v = seq.letters;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > seq.n) return DSViolation{DSViolation::Kind::kLetterOutOfRange, {i}};
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] == v[i + 1]) return DSViolation{DSViolation::Kind::kConsecutiveRepeat, {i, i + 1}};
  }
  // The longest a/b alternation is the number of runs in the restriction.
  for (std::size_t a = 1; a <= seq.n; ++a) {
    for (std::size_t b = a + 1; b <= seq.n; ++b) {
      std::vector<std::size_t> run_starts;
      std::size_t last = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if ((v[i] == a || v[i] == b) && v[i] != last) {
          run_starts.push_back(i);
          last = v[i];
          if (run_starts.size() == s + 2) return DSViolation{DSViolation::Kind::kAlternation, run_starts};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

class LambdaSearch {
 public:
  LambdaSearch(std::size_t s, std::size_t n, std::uint64_t max_nodes)
      : s_(s), n_(n), max_nodes_(max_nodes), runs_(n + 1, std::vector<std::size_t>(n + 1, 0)),
        last_(n + 1, std::vector<std::size_t>(n + 1, 0)) {}

  LambdaResult run() {
    dfs(0);
    return result_;
  }

 private:
  struct Change {
    std::size_t a, b, runs, last;
  };

  void dfs(std::size_t used) {
    if (++result_.nodes > max_nodes_) {
      throw BudgetExceeded("lambda_bruteforce: node budget of " + std::to_string(max_nodes_) + " exhausted");
    }
    if (seq_.size() > result_.length) {
      result_.length = seq_.size();
      result_.witness = DSSequence{n_, seq_};
    }
    const std::size_t top = std::min(used + 1, n_);
    for (std::size_t x = 1; x <= top; ++x) {
      if (!seq_.empty() && seq_.back() == x) continue;
      const std::size_t mark = changes_.size();
      bool ok = true;
      for (std::size_t y = 1; y <= used && ok; ++y) {
        if (y == x) continue;
        const std::size_t a = std::min(x, y), b = std::max(x, y);
        if (last_[a][b] != x) {
          changes_.push_back({a, b, runs_[a][b], last_[a][b]});
          if (runs_[a][b] == 0) runs_[a][b] = 1;
          ++runs_[a][b];
          last_[a][b] = x;
          ok = runs_[a][b] < s_ + 2;
        }
      }
      if (ok) {
        seq_.push_back(x);
        dfs(std::max(used, x));
        seq_.pop_back();
      }
      while (changes_.size() > mark) {
        const Change& c = changes_.back();
        runs_[c.a][c.b] = c.runs;
        last_[c.a][c.b] = c.last;
        changes_.pop_back();
      }
    }
  }

  std::size_t s_, n_;
  std::uint64_t max_nodes_;
  // Pairs involving a letter not yet used start counting when it first
  // appears: the earlier letter then already forms one run.
  std::vector<std::vector<std::size_t>> runs_;
  std::vector<std::vector<std::size_t>> last_;
  std::vector<Change> changes_;
  std::vector<std::size_t> seq_;
  LambdaResult result_;
};

}  // namespace

LambdaResult lambda_bruteforce(std::size_t s, std::size_t n, SearchBudget budget) {
  if (s < 1) throw std::invalid_argument("lambda_bruteforce: order must be at least 1");
  if (n == 0) return LambdaResult{0, DSSequence{0, {}}, 0};
  return LambdaSearch(s, n, budget.max_nodes).run();
}

DSSequence pad_singletons(DSSequence seq, std::size_t s) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t x : seq.letters) ++counts[x];
  for (const auto& [letter, count] : counts) {
    if (count != 1) continue;
    bool placed = false;
    for (std::size_t pos = seq.letters.size() + 1; pos-- > 0;) {
      DSSequence trial = seq;
      trial.letters.insert(trial.letters.begin() + static_cast<std::ptrdiff_t>(pos), letter);
      if (!is_davenport_schinzel(trial, s)) {
        seq = std::move(trial);
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("pad_singletons: no legal position for letter " + std::to_string(letter));
  }
  return seq;
}

DSSequence generate_ds3(std::size_t n, DSStrategy strategy, SearchBudget budget) {
  if (n < 1) throw std::invalid_argument("generate_ds3: n must be at least 1");
  if (n == 1) return DSSequence{1, {1}};
  DSSequence seq{n, {}};
  if (strategy == DSStrategy::kBaseline) {
    seq.letters.push_back(1);
    for (std::size_t x = 2; x <= n; ++x) {
      seq.letters.push_back(x);
      seq.letters.push_back(1);
    }
  } else {
    if (n > 6) throw std::invalid_argument("generate_ds3: BRUTE_SMALL supports n <= 6");
    seq = lambda_bruteforce(3, n, budget).witness;
  }
  return pad_singletons(std::move(seq), 3);
}

WalczakGraph walczak_graph(const DSSequence& seq) {
  if (auto bad = is_davenport_schinzel(seq, 3)) {
    throw PreconditionViolated("walczak_graph: input is not a Davenport-Schinzel sequence of order 3");
  }
  const auto& v = seq.letters;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> extremes;
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [it, fresh] = extremes.try_emplace(v[i], i, i);
    if (!fresh) it->second.second = i;
    ++counts[v[i]];
  }
  for (const auto& [letter, count] : counts) {
    if (count < 2) {
      throw PreconditionViolated("walczak_graph: letter " + std::to_string(letter) + " occurs only once");
    }
  }

  WalczakGraph out;
  std::vector<std::size_t> vertex_at(v.size(), SIZE_MAX);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& [lo, hi] = extremes.at(v[i]);
    if (i == lo || i == hi) {
      vertex_at[i] = out.vertices.size();
      out.vertices.push_back({v[i], i == hi, i});
    }
  }
  out.graph = OrderedGraph(out.vertices.size());

  std::size_t start = 0;
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    const std::size_t end = out.vertices[k].position + 1;
    out.intervals.emplace_back(start, end);
    std::vector<std::size_t> seen;
    for (std::size_t i = start; i < end; ++i) {
      if (std::find(seen.begin(), seen.end(), v[i]) != seen.end()) {
        throw std::logic_error("walczak_graph: repeated letter inside an interval");
      }
      seen.push_back(v[i]);
      if (i + 1 < end) out.graph.add_edge(vertex_at[extremes.at(v[i]).first], k);
    }
    start = end;
  }
  if (out.graph.edge_count() != v.size() - out.vertices.size()) {
    throw std::logic_error("walczak_graph: edge count differs from |seq| - 2n");
  }
  return out;
}

const char* to_string(K33Verdict v) {
  switch (v) {
    case K33Verdict::kFree: return "FREE";
    case K33Verdict::kWitness: return "WITNESS";
    case K33Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

LowerBoundCertificate k33_free_lowerbound(std::size_t n, DSStrategy strategy, SearchBudget budget) {
  if (n < 2) throw std::invalid_argument("k33_free_lowerbound: n must be at least 2");
  LowerBoundCertificate cert;
  cert.sequence = generate_ds3(n, strategy, budget);
  const WalczakGraph w = walczak_graph(cert.sequence);
  cert.walczak_edges = w.graph.edge_count();

  OrderedGraph thinned = w.graph;
  for (Vertex k = 0; k + 1 < thinned.size(); ++k) {
    if (thinned.adjacent(k, k + 1)) {
      thinned.remove_edge(k, k + 1);
      ++cert.consecutive_removed;
    }
  }
  const BipartiteSplit split = bipartite_split(thinned);
  cert.graph = kept_subgraph(split, thinned.size());
  cert.edge_count = cert.graph.edge_count();
  cert.h0_free = !find_ordered_pattern(cert.graph, PatternGraph::h0());
  cert.h1_free = !find_ordered_pattern(cert.graph, PatternGraph::h1());

  if (cert.graph.size() <= kExhaustiveK33Limit) {
    const KttResult r = find_complete_bipartite(cert.graph, 3, budget);
    switch (r.status) {
      case SearchStatus::kNone: cert.k33_verdict = K33Verdict::kFree; break;
      case SearchStatus::kFound:
        cert.k33_verdict = K33Verdict::kWitness;
        cert.k33_witness = r.witness;
        break;
      case SearchStatus::kInconclusive: cert.k33_verdict = K33Verdict::kInconclusive; break;
    }
  }
  if (cert.k33_verdict == K33Verdict::kInconclusive) cert.implied_by_lemma = cert.h0_free && cert.h1_free;
  return cert;
}

namespace {

// A_i(j) saturated at cap.
std::uint64_t ackermann_capped(std::size_t i, std::uint64_t j, std::uint64_t cap) {
  if (i == 1) return j >= cap / 2 + 1 ? cap : std::min(cap, 2 * j);
  std::uint64_t value = 2;  // A_i(1)
  for (std::uint64_t k = 2; k <= j; ++k) {
    if (value >= cap) return cap;
    value = ackermann_capped(i - 1, value, cap);
  }
  return std::min(value, cap);
}

}  // namespace

std::size_t inverse_ackermann(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("inverse_ackermann: n must be at least 1");
  for (std::size_t i = 1;; ++i) {
    if (ackermann_capped(i, i, n) >= n) return i;
  }
}

}  // namespace polyvis
