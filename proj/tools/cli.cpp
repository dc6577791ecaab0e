#include "cli.hpp"

#include "polyvis/audits.hpp"
#include "polyvis/ds_lowerbound.hpp"
#include "polyvis/generators.hpp"
#include "polyvis/io.hpp"
#include "polyvis/matrix.hpp"
#include "polyvis/ordered_graphs.hpp"
#include "polyvis/visibility.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace polyvis::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Globals {
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::size_t threads = 1;
  Seed seed = 0;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }

  Polygon load_polygon(const std::string& path) { return validate_polygon(parse_polygon(read_file(path))); }

  std::vector<BoundarySite> load_sites(const Polygon& polygon, const std::string& path) {
    if (path.empty()) return vertex_sites(polygon);
    return parse_sites(read_file(path));
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kViolation: return kViolation;
    case Verdict::kInconclusive: return kBudgetExceeded;
    case Verdict::kPass:
    case Verdict::kNotApplicable: return kOk;
  }
  return kOk;
}

std::vector<Seed> parse_seed_list(const std::string& text) {
  std::vector<Seed> seeds;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const Seed lo = std::stoull(text.substr(0, dots));
    const Seed hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--seeds", "empty range " + text);
    for (Seed s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) seeds.push_back(std::stoull(item));
  return seeds;
}

json certificate_json(const LowerBoundCertificate& cert) {
  json j{{"n", cert.sequence.n},
         {"sequence_length", cert.sequence.letters.size()},
         {"walczak_edges", cert.walczak_edges},
         {"consecutive_removed", cert.consecutive_removed},
         {"edges", cert.edge_count},
         {"h0_free", cert.h0_free},
         {"h1_free", cert.h1_free},
         {"k33", to_string(cert.k33_verdict)},
         {"implied_by_lemma", cert.implied_by_lemma}};
  if (cert.k33_witness) j["k33_witness"] = {{"a", cert.k33_witness->a}, {"b", cert.k33_witness->b}};
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  Globals g;
  CLI::App app{"Exact visibility-graph, ordered-graph and forbidden-matrix toolkit", "polyvis"};
  app.require_subcommand(1);
  app.add_option("--budget", g.budget, "Node budget for exhaustive searches");
  app.add_option("--threads", g.threads, "Worker threads for report")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized generators");

  int code = kOk;
  const auto budget = [&] { return SearchBudget{g.budget}; };

  // generate
  std::string family_name, out_path;
  std::size_t n = 0;
  auto* generate = app.add_subcommand("generate", "Write a polygon from a seeded family");
  generate->add_option("--family", family_name)->required()->check(CLI::IsMember({"convex", "star", "xmonotone", "random", "fan"}));
  generate->add_option("--n", n)->required();
  generate->add_option("--out", out_path);
  generate->callback([&] {
    const Polygon p = generate_polygon(*parse_family(family_name), n, g.seed);
    runner.emit(out_path, format_polygon(p));
  });

  // visgraph
  std::string in_path, sites_path;
  auto* visgraph = app.add_subcommand("visgraph", "Write the visibility graph of a polygon");
  visgraph->add_option("--in", in_path)->required();
  visgraph->add_option("--sites", sites_path);
  visgraph->add_option("--out", out_path);
  visgraph->callback([&] {
    const Polygon p = runner.load_polygon(in_path);
    const CyclicGraph vg = sites_path.empty() ? vertex_visibility_graph(p) : site_visibility_graph(p, runner.load_sites(p, sites_path));
    runner.emit(out_path, format_graph(vg, VertexOrder::kCyclic));
  });

  // check
  std::string check_kind;
  std::size_t t = 2;
  auto* check = app.add_subcommand("check", "Run one audit and print its JSON report");
  check->add_option("kind", check_kind)->required()->check(CLI::IsMember({"k4", "cherry", "cp", "star", "monotone", "mtplus"}));
  check->add_option("--in", in_path)->required();
  check->add_option("--sites", sites_path);
  check->add_option("--t", t)->check(CLI::PositiveNumber);
  check->callback([&] {
    const Polygon p = runner.load_polygon(in_path);
    AuditReport report;
    if (check_kind == "k4") {
      report = check_k4_theorem(p);
    } else if (check_kind == "cherry") {
      report = audit_double_cherry(p, sites_path.empty() ? std::nullopt : std::optional(runner.load_sites(p, sites_path)));
    } else if (check_kind == "cp") {
      const CyclicGraph vg = sites_path.empty() ? vertex_visibility_graph(p) : site_visibility_graph(p, runner.load_sites(p, sites_path));
      report = capoyleas_pach_audit(vg, budget());
    } else if (check_kind == "star") {
      report = star_theorem_audit(p, runner.load_sites(p, sites_path), t, budget());
    } else if (check_kind == "monotone") {
      report = monotone_theorem_audit(p, runner.load_sites(p, sites_path), t);
    } else {
      report = polygon_mt_audit(p, t);
    }
    report.instance["file"] = in_path;
    out << report.to_json().dump() << '\n';
    code = verdict_exit(report.verdict);
  });

  // construct
  std::string construct_kind, strategy_name = "baseline", pattern_kind;
  auto* construct = app.add_subcommand("construct", "Build sequences, graphs and pattern matrices");
  construct->add_option("artifact", construct_kind)->required()->check(CLI::IsMember({"walczak", "k33lb", "pattern", "ds3"}));
  construct->add_option("--n", n);
  construct->add_option("--t", t)->check(CLI::PositiveNumber);
  construct->add_option("--in", in_path, "Sequence file for walczak");
  construct->add_option("--strategy", strategy_name)->check(CLI::IsMember({"baseline", "brute_small"}));
  construct->add_option("--kind", pattern_kind)
      ->check(CLI::IsMember({"identity", "polygon_mt", "polygon_mt_plus", "monotone_mt", "h0", "h1"}));
  construct->add_option("--out", out_path);
  construct->callback([&] {
    const DSStrategy strategy = strategy_name == "baseline" ? DSStrategy::kBaseline : DSStrategy::kBruteSmall;
    if (construct_kind == "ds3") {
      if (n < 1) throw CLI::ValidationError("--n", "ds3 needs --n >= 1");
      const DSSequence seq = generate_ds3(n, strategy, budget());
      runner.emit(out_path, format_sequence(seq));
    } else if (construct_kind == "walczak") {
      DSSequence seq;
      if (!in_path.empty()) {
        seq = parse_sequence(read_file(in_path));
      } else if (n >= 1) {
        seq = generate_ds3(n, strategy, budget());
      } else {
        throw CLI::ValidationError("--in", "walczak needs --in or --n");
      }
      const WalczakGraph w = walczak_graph(seq);
      runner.emit(out_path, format_graph(w.graph, VertexOrder::kOrdered));
      if (!out_path.empty()) {
        out << json{{"vertices", w.graph.size()}, {"edges", w.graph.edge_count()},
                    {"sequence_length", seq.letters.size()}}.dump()
            << '\n';
      }
    } else if (construct_kind == "k33lb") {
      if (n < 2) throw CLI::ValidationError("--n", "k33lb needs --n >= 2");
      const LowerBoundCertificate cert = k33_free_lowerbound(n, strategy, budget());
      runner.emit(out_path, format_graph(cert.graph, VertexOrder::kOrdered));
      if (!out_path.empty()) out << certificate_json(cert).dump() << '\n';
      if (cert.k33_verdict == K33Verdict::kWitness) code = kViolation;
    } else {
      if (pattern_kind.empty()) throw CLI::ValidationError("--kind", "pattern needs --kind");
      if (pattern_kind == "h0" || pattern_kind == "h1") {
        const PatternGraph pg = pattern_kind == "h0" ? PatternGraph::h0() : PatternGraph::h1();
        runner.emit(out_path, format_graph(OrderedGraph(pg.k, pg.edges), VertexOrder::kOrdered));
        return;
      }
      static const std::map<std::string, PatternKind> kinds{{"identity", PatternKind::kIdentity},
                                                           {"polygon_mt", PatternKind::kPolygonMt},
                                                           {"polygon_mt_plus", PatternKind::kPolygonMt},
                                                           {"monotone_mt", PatternKind::kMonotoneMt}};
      BitMatrix m = build_pattern(kinds.at(pattern_kind), t);
      if (pattern_kind == "polygon_mt_plus") m = plus_extend(m);
      runner.emit(out_path, format_matrix(m));
    }
  });

  // extremal
  std::string extremal_kind, pattern_path;
  std::size_t order = 3;
  auto* extremal = app.add_subcommand("extremal", "Exact extremal values by exhaustive search");
  extremal->add_option("kind", extremal_kind)->required()->check(CLI::IsMember({"matrix", "lambda"}));
  extremal->add_option("--pattern", pattern_path, "Matrix file of the forbidden pattern");
  extremal->add_option("--n", n)->required();
  extremal->add_option("--s", order, "Davenport-Schinzel order")->check(CLI::PositiveNumber);
  extremal->callback([&] {
    if (extremal_kind == "matrix") {
      if (pattern_path.empty()) throw CLI::ValidationError("--pattern", "matrix needs --pattern");
      const BitMatrix pattern = parse_matrix(read_file(pattern_path));
      const ExtremalResult r = max_ones_avoiding(pattern, n, budget());
      out << json{{"n", n}, {"max_ones", r.count}, {"witness", r.witness.to_rows()}, {"nodes", r.nodes}}.dump() << '\n';
    } else {
      const LambdaResult r = lambda_bruteforce(order, n, budget());
      out << json{{"s", order}, {"n", n}, {"lambda", r.length}, {"witness", r.witness.letters}, {"nodes", r.nodes}}.dump()
          << '\n';
    }
  });

  // report
  std::size_t n_min = 3, n_max = 12;
  std::string seeds_text;
  auto* report = app.add_subcommand("report", "Write the per-instance CSV report");
  report->add_option("--family", family_name)->required()->check(CLI::IsMember({"convex", "star", "xmonotone", "random", "fan"}));
  report->add_option("--nmin", n_min);
  report->add_option("--nmax", n_max);
  report->add_option("--seeds", seeds_text, "Seed range a..b or comma list");
  report->add_option("--t", t)->check(CLI::PositiveNumber);
  report->add_option("--out", out_path);
  report->callback([&] {
    ReportConfig config;
    config.family = *parse_family(family_name);
    config.n_min = n_min;
    config.n_max = n_max;
    config.seeds = seeds_text.empty() ? std::vector<Seed>{g.seed} : parse_seed_list(seeds_text);
    config.t = t;
    config.budget = budget();
    config.threads = g.threads;
    const auto rows = zarankiewicz_report(config);
    std::string csv = std::string(kReportHeader) + "\n";
    for (const auto& row : rows) {
      csv += format_csv_row(row) + "\n";
      for (const auto& a : row.audits) {
        if (a.verdict == Verdict::kViolation) {
          err << a.to_json().dump() << '\n';
          code = kViolation;
        }
      }
    }
    runner.emit(out_path, csv);
  });

  for (auto* sub : {generate, visgraph, check, construct, extremal, report}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const SiteError& e) {
    err << "invalid sites: " << e.what() << '\n';
    return kParseError;
  } catch (const PolygonError& e) {
    err << "invalid polygon: " << e.what() << '\n';
    return kInvalidPolygon;
  } catch (const PreconditionViolated& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kPreconditionFailed;
  }
  return code;
}

}  // namespace polyvis::cli
