#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyvis {

/// Node budget for exhaustive searches. Counting nodes instead of wall time
/// keeps verdicts machine-independent.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchStatus { kFound, kNone, kInconclusive };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "FOUND";
    case SearchStatus::kNone: return "NONE";
    case SearchStatus::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace polyvis
