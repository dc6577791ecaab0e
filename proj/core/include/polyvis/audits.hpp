#pragma once

#include "polyvis/budget.hpp"
#include "polyvis/generators.hpp"
#include "polyvis/geometry.hpp"
#include "polyvis/graph.hpp"
#include "polyvis/visibility.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polyvis {

enum class Verdict { kPass, kViolation, kInconclusive, kNotApplicable };

const char* to_string(Verdict v);

struct AuditReport {
  std::string audit;
  nlohmann::json instance = nlohmann::json::object();
  Verdict verdict = Verdict::kPass;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json counters = nlohmann::json::object();
  std::string note;

  nlohmann::json to_json() const;
};

class NotStarShaped : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class NotMonotone : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Any crossing pair of visibility edges yields a K_4: the pair whose
/// endpoint quadrilateral has the least area is re-verified on all six
/// vertex pairs. With no crossing pair the graph must have at most 2n-3
/// edges.
AuditReport check_k4_theorem(const Polygon& polygon);

/// Vertex in the clockwise range [c_k, c_{k+1}] seeing every r_j, or
/// nullopt. Throws PreconditionViolated unless r then c appear clockwise
/// on the polygon and r_i sees c_i and c_{i+k}.
std::optional<Vertex> find_common_watcher(const Polygon& polygon, const CyclicGraph& visibility,
                                          const std::vector<Vertex>& r, const std::vector<Vertex>& c);
std::optional<Vertex> find_common_watcher(const Polygon& polygon, const std::vector<Vertex>& r,
                                          const std::vector<Vertex>& c);

/// Every non-adjacent pair must be neither a double cherry nor joined by
/// crossing sequences in both directions. Without sites the polygon
/// vertices are used.
AuditReport audit_double_cherry(const Polygon& polygon,
                                const std::optional<std::vector<BoundarySite>>& sites = std::nullopt);

/// With k the largest number of pairwise crossing edges and 2k <= n-1:
/// |E| <= 2kn - k(2k+1).
AuditReport capoyleas_pach_audit(const CyclicGraph& g, SearchBudget budget = {});

/// Splits the sites by a line through the kernel centroid and checks, in
/// each half: (i) crossing edges (a,b), (c,d) with a<c<b<d force the edge
/// (a,d); (ii) without a K_{t,t} in the whole graph there are at most 2t-1
/// pairwise crossing edges. Throws NotStarShaped on an empty kernel.
AuditReport star_theorem_audit(const Polygon& polygon, const std::vector<BoundarySite>& sites, std::size_t t,
                               SearchBudget budget = {});

/// Caps on the number of matrix occurrences examined per audit.
inline constexpr std::size_t kDefaultOccurrenceCap = 2000;

/// Per chain: every occurrence of the monotone pattern in the split
/// adjacency matrix must map to a K_{t,t} of the visibility graph.
/// Throws NotMonotone unless the polygon is x-monotone.
AuditReport monotone_theorem_audit(const Polygon& polygon, const std::vector<BoundarySite>& sites, std::size_t t,
                                   std::size_t occurrence_cap = kDefaultOccurrenceCap);

/// Every occurrence of M_t^+ in the split adjacency matrix of the vertex
/// visibility graph yields, through t common watchers, a K_{t,t}.
AuditReport polygon_mt_audit(const Polygon& polygon, std::size_t t,
                             std::size_t occurrence_cap = kDefaultOccurrenceCap);

/// True iff g has four pairwise adjacent vertices; fills `witness` if given.
bool contains_k4(const Graph& g, std::vector<Vertex>* witness = nullptr);

struct ReportConfig {
  PolygonFamily family = PolygonFamily::kConvex;
  std::size_t n_min = 3;
  std::size_t n_max = 12;
  std::vector<Seed> seeds{0};
  std::size_t t = 2;
  SearchBudget budget{2'000'000};
  std::size_t threads = 1;
  /// Run the audits of this header on every instance besides the columns.
  bool audits = true;
};

struct ReportRow {
  PolygonFamily family;
  std::size_t n;
  Seed seed;
  std::size_t t;
  std::size_t edges;
  bool k4;
  SearchStatus ktt;
  std::size_t bound_2n3;
  std::size_t max_crossing;
  bool max_crossing_exact;
  std::optional<long long> cp_bound;
  std::size_t alpha;
  double e_over_n;
  double e_over_n_alpha;
  std::vector<AuditReport> audits;
};

inline constexpr const char* kReportHeader =
    "family,n,seed,t,edges,k4,ktt,bound2n3,maxcross,cpbound,alpha,e_over_n,e_over_nalpha";

ReportRow report_instance(PolygonFamily family, std::size_t n, Seed seed, const ReportConfig& config);

/// Rows sorted by (n, seed) regardless of the thread count. Families that
/// ignore the seed get one row per n.
std::vector<ReportRow> zarankiewicz_report(const ReportConfig& config);

std::string format_csv_row(const ReportRow& row);

}  // namespace polyvis
