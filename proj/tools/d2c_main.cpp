// Command-line front end: per-graph analysis (check), theorem sweeps
// (sweep), numeric bound checks (bounds), and isomorph-free generation
// (gen). Graph input and output use the graph6 line format throughout.
//
// Exit codes: 0 = no violations, 1 = violations found, 2 = usage or
// parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "d2c/bounds.hpp"
#include "d2c/criticality.hpp"
#include "d2c/domination.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/graph6.hpp"
#include "d2c/quasi.hpp"
#include "d2c/verify.hpp"

namespace {

using namespace d2c;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string murty_name(MurtySimonStatus s) {
  switch (s) {
    case MurtySimonStatus::kStrict: return "STRICT";
    case MurtySimonStatus::kEqualityBalancedBipartite: return "EQUALITY_BALANCED_BIPARTITE";
    case MurtySimonStatus::kViolation: return "VIOLATION";
  }
  return "?";
}

std::vector<ClaimId> parse_claims(const std::string& spec_text, std::ostream& err, bool& ok) {
  std::vector<ClaimId> out;
  ok = true;
  std::stringstream ss(spec_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto id = claim_from_name(item);
    if (!id) {
      err << "unknown claim id '" << item << "'; valid ids:";
      for (const ClaimInfo& c : claim_registry()) err << " " << c.cli_name;
      err << "\n";
      ok = false;
      return {};
    }
    out.push_back(*id);
  }
  if (out.empty()) {
    err << "no claim ids given\n";
    ok = false;
  }
  return out;
}

// One analysis line per graph; returns the number of claim violations.
int report_graph(const Graph& g, double threshold, std::ostream& out) {
  out << "graph6=" << encode_graph6(g);
  out << " n=" << g.order() << " m=" << g.size();
  if (g.order() == 0) {
    out << "\n";
    return 0;
  }

  GraphFacts facts(g, threshold);
  auto [mindeg, maxdeg] = degree_extremes(g);
  out << " min_degree=" << mindeg << " max_degree=" << maxdeg;
  out << " diameter=" << facts.diam().to_string();

  DominationResult gamma = domination_number(g);
  DominationResult gamma_t = total_domination_number(g);
  out << " gamma=" << gamma.number;
  out << " gamma_t=" << (gamma_t.is_infinite() ? "inf" : std::to_string(gamma_t.number));

  out << " diameter2_critical=" << yes_no(facts.d2c());
  out << " ttc3=" << yes_no(facts.ttc3());
  out << " super4=" << yes_no(facts.super4());
  out << " murty_simon=" << (facts.d2c() ? murty_name(murty_simon_status(g).status) : "n/a");

  int nonadjacent = g.order() * (g.order() - 1) / 2 - g.size();
  out << " nonadjacent_pairs=" << nonadjacent;
  if (facts.ttc3()) {
    int census = 0;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (!g.adjacent(u, v)) census += static_cast<int>(find_quasi_edges(g, u, v).size());
    out << " quasi_edges=" << census;
  } else {
    out << " quasi_edges=n/a";
  }

  int violations = 0;
  std::vector<std::string> details;
  for (ClaimId id : per_graph_claims()) {
    Verdict v = run_claim(id, facts);
    if (!v.holds) {
      ++violations;
      details.push_back(std::string(claim_info(id).name) + " " + v.witness);
    }
  }
  out << " violations=" << violations << "\n";
  for (const std::string& d : details) out << "violation: " << d << "\n";
  return violations;
}

int cmd_check(const std::vector<std::string>& files, bool strict, double threshold) {
  std::uint64_t violations = 0;
  bool parse_failed = false;

  auto process_stream = [&](std::istream& in, const std::string& name) {
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (line.empty()) continue;
      try {
        Graph g = decode_graph6(line);
        violations += report_graph(g, threshold, std::cout);
      } catch (const std::exception& e) {
        std::cerr << name << ":" << lineno << ": " << e.what() << "\n";
        parse_failed = true;
        if (strict) return false;
      }
    }
    return true;
  };

  bool keep_going = true;
  if (files.empty()) {
    keep_going = process_stream(std::cin, "<stdin>");
  } else {
    for (const std::string& f : files) {
      std::ifstream in(f);
      if (!in) {
        std::cerr << "cannot open " << f << "\n";
        return kExitUsage;
      }
      if (!(keep_going = process_stream(in, f))) break;
    }
  }
  if (strict && (!keep_going || parse_failed)) return kExitUsage;
  return violations == 0 ? kExitOk : kExitViolations;
}

int cmd_sweep(int n_max, const std::string& filter_name_arg, const std::string& claims_arg,
              int jobs, const std::string& report_path, bool override_guard, double threshold) {
  auto filter = filter_from_name(filter_name_arg);
  if (!filter) {
    std::cerr << "unknown filter '" << filter_name_arg
              << "'; valid: all connected diameter2 d2critical ttc3 super4\n";
    return kExitUsage;
  }
  std::vector<ClaimId> claims;
  if (claims_arg.empty()) {
    claims = per_graph_claims();
  } else {
    bool ok = false;
    claims = parse_claims(claims_arg, std::cerr, ok);
    if (!ok) return kExitUsage;
    for (ClaimId id : claims)
      if (claim_info(id).scope != ClaimScope::kPerGraph) {
        std::cerr << "claim " << claim_info(id).cli_name
                  << " is numeric-scope; use the bounds command\n";
        return kExitUsage;
      }
  }
  if (n_max > 10 && !override_guard) {
    std::cerr << "n-max above 10 needs --override-guard\n";
    return kExitUsage;
  }

  SweepOptions options;
  options.jobs = std::max(1, jobs);
  options.override_guard = override_guard;
  options.thm36_threshold = threshold;

  SweepReport report;
  try {
    report = sweep_range(1, n_max, *filter, claims, options);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::string text = to_text(report);
  std::string path = report_path;
  if (path.empty()) {
    if (const char* env = std::getenv("D2C_REPORT_PATH")) path = env;
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return kExitUsage;
    }
    out << text;
    std::cout << "report written to " << path << "\n";
  }
  return report.total_violations() == 0 ? kExitOk : kExitViolations;
}

int cmd_bounds(const std::string& range_arg) {
  long long lo = 3, hi = 10000;
  if (!range_arg.empty()) {
    auto colon = range_arg.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("expected lo:hi");
      lo = std::stoll(range_arg.substr(0, colon));
      hi = std::stoll(range_arg.substr(colon + 1));
    } catch (const std::exception&) {
      std::cerr << "bad --n-range '" << range_arg << "'; expected lo:hi\n";
      return kExitUsage;
    }
  }
  try {
    SweepReport report = run_numeric_claims({lo, hi});
    std::cout << to_text(report);
    return report.total_violations() == 0 ? kExitOk : kExitViolations;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_gen(int n, const std::string& filter_name_arg, bool override_guard) {
  auto filter = filter_from_name(filter_name_arg);
  if (!filter) {
    std::cerr << "unknown filter '" << filter_name_arg
              << "'; valid: all connected diameter2 d2critical ttc3 super4\n";
    return kExitUsage;
  }
  EnumerationTask task;
  task.n = n;
  task.filter = *filter;
  task.override_guard = override_guard;
  try {
    generate(task, [](const Graph& g) { std::cout << encode_graph6(g) << "\n"; });
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for diameter-2-critical and total-domination-critical graphs"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "analyze graph6 lines from files or stdin");
  std::vector<std::string> check_files;
  bool strict = false;
  double check_threshold = constants().threshold;
  check->add_option("files", check_files, "graph6 files (default: stdin)");
  check->add_flag("--strict", strict, "stop with exit 2 on the first parse error");
  check->add_option("--threshold", check_threshold, "max-degree coefficient for THM_3_6");

  auto* sweep_cmd = app.add_subcommand("sweep", "run claims over enumerated graphs");
  int n_max = 8;
  std::string sweep_filter = "all", claims_arg, report_path;
  int jobs = 1;
  bool override_guard = false;
  double sweep_threshold = constants().threshold;
  sweep_cmd->add_option("--n-max", n_max, "largest order to enumerate")->required();
  sweep_cmd->add_option("--filter", sweep_filter,
                        "all|connected|diameter2|d2critical|ttc3|super4");
  sweep_cmd->add_option("--claims", claims_arg, "comma-separated claim ids (default: all)");
  sweep_cmd->add_option("--jobs", jobs, "worker threads");
  sweep_cmd->add_option("--report-path", report_path,
                        "write the report here (default: stdout or $D2C_REPORT_PATH)");
  sweep_cmd->add_flag("--override-guard", override_guard, "allow n-max above 10");
  sweep_cmd->add_option("--threshold", sweep_threshold, "max-degree coefficient for THM_3_6");

  auto* bounds_cmd = app.add_subcommand("bounds", "numeric constants and appendix inequalities");
  std::string range_arg;
  bounds_cmd->add_option("--n-range", range_arg, "integer range lo:hi (default 3:10000)");

  auto* gen = app.add_subcommand("gen", "emit one graph6 line per isomorphism class");
  int gen_n = 1;
  std::string gen_filter = "all";
  bool gen_override = false;
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--filter", gen_filter, "all|connected|diameter2|d2critical|ttc3|super4");
  gen->add_flag("--override-guard", gen_override, "allow n above 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_files, strict, check_threshold);
    if (sweep_cmd->parsed())
      return cmd_sweep(n_max, sweep_filter, claims_arg, jobs, report_path, override_guard,
                       sweep_threshold);
    if (bounds_cmd->parsed()) return cmd_bounds(range_arg);
    if (gen->parsed()) return cmd_gen(gen_n, gen_filter, gen_override);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
