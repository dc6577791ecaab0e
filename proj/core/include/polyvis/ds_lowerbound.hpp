#pragma once

#include "polyvis/budget.hpp"
#include "polyvis/ordered_graphs.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polyvis {

/// Sequence of letters over the alphabet 1..n.
struct DSSequence {
  std::size_t n = 0;
  std::vector<std::size_t> letters;

  friend bool operator==(const DSSequence&, const DSSequence&) = default;
};

struct DSViolation {
  enum class Kind { kLetterOutOfRange, kConsecutiveRepeat, kAlternation };
  Kind kind;
  /// kConsecutiveRepeat: the two positions. kAlternation: the s+2
  /// alternating positions. kLetterOutOfRange: the offending position.
  std::vector<std::size_t> positions;
};

/// nullopt when the sequence has no immediate repetition and no alternation
/// a,b,a,b,... of length s+2. Throws std::invalid_argument if s < 1.
std::optional<DSViolation> is_davenport_schinzel(const DSSequence& seq, std::size_t s);

struct LambdaResult {
  std::size_t length = 0;
  DSSequence witness;
  std::uint64_t nodes = 0;
};

/// Exact lambda_s(n) by depth-first search over sequences that introduce new
/// letters in increasing order. Throws BudgetExceeded.
LambdaResult lambda_bruteforce(std::size_t s, std::size_t n, SearchBudget budget = {});

enum class DSStrategy { kBaseline, kBruteSmall };

/// Gives every letter that occurs exactly once a second occurrence, placed
/// at the rightmost insertion point that keeps the sequence DS of order s.
DSSequence pad_singletons(DSSequence seq, std::size_t s = 3);

/// kBaseline: 1,2,1,3,1,...,n,1 with singletons padded.
/// kBruteSmall: a longest DS(3) sequence (n <= 6), padded.
/// For n = 1 both return (1): a second occurrence would repeat immediately.
DSSequence generate_ds3(std::size_t n, DSStrategy strategy, SearchBudget budget = {});

struct WalczakVertex {
  std::size_t letter;
  bool rightmost;
  std::size_t position;
};

struct WalczakGraph {
  /// Vertex k is the k-th extreme appearance in sequence order.
  OrderedGraph graph;
  std::vector<WalczakVertex> vertices;
  /// Half-open position ranges; interval k is terminated by vertex k.
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
};

/// Ordered graph on the leftmost/rightmost appearances of each letter with
/// an edge (i^l, w) for each non-extreme occurrence of i in the interval
/// ending at w. Throws PreconditionViolated unless seq is DS of order 3 and
/// every occurring letter occurs at least twice.
WalczakGraph walczak_graph(const DSSequence& seq);

enum class K33Verdict { kFree, kWitness, kInconclusive };

const char* to_string(K33Verdict v);

struct LowerBoundCertificate {
  DSSequence sequence;
  std::size_t walczak_edges = 0;
  std::size_t consecutive_removed = 0;
  OrderedGraph graph;
  std::size_t edge_count = 0;
  bool h0_free = false;
  bool h1_free = false;
  K33Verdict k33_verdict = K33Verdict::kInconclusive;
  /// Set when the exhaustive check was skipped and H0/H1-freeness implies
  /// K_{3,3}-freeness.
  bool implied_by_lemma = false;
  std::optional<KttWitness> k33_witness;
};

/// Largest vertex count for which the K_{3,3} verdict is computed
/// exhaustively.
inline constexpr std::size_t kExhaustiveK33Limit = 64;

/// DS(3) sequence -> Walczak graph -> drop edges between consecutive
/// vertices -> left/right split. Throws std::invalid_argument if n < 2.
LowerBoundCertificate k33_free_lowerbound(std::size_t n, DSStrategy strategy = DSStrategy::kBaseline,
                                          SearchBudget budget = {});

/// alpha(n) = min{ i >= 1 : A_i(i) >= n } with A_1(j) = 2j, A_i(1) = 2,
/// A_i(j) = A_{i-1}(A_i(j-1)).
std::size_t inverse_ackermann(std::uint64_t n);

}  // namespace polyvis
