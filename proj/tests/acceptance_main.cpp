// Acceptance suite: one pass/fail line per criterion. Exhaustive
// desk-scale sweeps of every structural claim, the numeric suite, the
// solver and enumeration oracles, and the codec contract.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "d2c/bounds.hpp"
#include "d2c/criticality.hpp"
#include "d2c/domination.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/graph6.hpp"
#include "d2c/quasi.hpp"
#include "d2c/verify.hpp"
#include "oracles.hpp"

using namespace d2c;
using d2c::testing::oracle_class_count;
using d2c::testing::oracle_domination;
using d2c::testing::oracle_total_domination;

namespace {

int g_jobs = 1;

SweepOptions options() {
  SweepOptions o;
  o.jobs = g_jobs;
  return o;
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  s.for_each([&](int v) { m |= std::uint64_t{1} << v; });
  return m;
}

bool report_sweep(const SweepReport& rep, std::string& detail) {
  for (const auto& [id, tally] : rep.tallies)
    detail += std::string(" ") + claim_info(id).name + "=" + std::to_string(tally.checked) + "/" +
              std::to_string(tally.applicable) + "/" + std::to_string(tally.violations);
  for (std::size_t i = 0; i < rep.counterexamples.size() && i < 3; ++i)
    detail += " CE[" + std::string(claim_info(rep.counterexamples[i].id).name) + " " +
              rep.counterexamples[i].graph6 + " " + rep.counterexamples[i].detail + "]";
  return rep.total_violations() == 0;
}

// 1. Murty-Simon bound over all diameter-2-critical graphs, 3 <= n <= 9.
bool criterion1(std::string& detail) {
  ClaimId claims[] = {ClaimId::kConj11};
  SweepReport rep = sweep_range(3, 9, Filter::kDiameter2Critical, claims, options());
  detail = "d2c graphs checked=" + std::to_string(rep.tallies[0].second.checked) + ";";
  return report_sweep(rep, detail);
}

// 2. Complement duality: per-graph claim plus the set-level bijection.
bool criterion2(std::string& detail) {
  ClaimId claims[] = {ClaimId::kThm21};
  SweepReport rep = sweep_range(3, 8, Filter::kAll, claims, options());
  bool ok = report_sweep(rep, detail);

  for (int n = 3; n <= 8; ++n) {
    std::set<CanonicalForm> duals, criticals;
    int stars = 0;
    EnumerationTask t;
    t.n = n;
    t.filter = Filter::kDiameter2Critical;
    generate(t, [&](const Graph& g) {
      if (degree_extremes(g).second == n - 1)
        ++stars;  // the unique star; its complement has an isolated vertex
      else
        duals.insert(canonical_form(complement(g)));
    });
    t.filter = Filter::kTtc3;
    std::uint64_t ttc3 = generate(t, [&](const Graph& g) { criticals.insert(canonical_form(g)); });
    t.filter = Filter::kSuper4;
    std::uint64_t super4 =
        generate(t, [&](const Graph& g) { criticals.insert(canonical_form(g)); });
    if (criticals.size() != ttc3 + super4) {
      detail += " ttc3/super4 overlap at n=" + std::to_string(n);
      ok = false;
    }
    if (stars != 1) {
      detail += " stars=" + std::to_string(stars) + " at n=" + std::to_string(n);
      ok = false;
    }
    if (duals != criticals) {
      detail += " bijection fails at n=" + std::to_string(n);
      ok = false;
    }
    detail += " n" + std::to_string(n) + ":" + std::to_string(duals.size()) + "+star";
  }
  return ok;
}

// 3. 4_t-supercritical == union of two nontrivial complete graphs.
bool criterion3(std::string& detail) {
  ClaimId claims[] = {ClaimId::kThm22};
  SweepReport rep = sweep_range(2, 8, Filter::kAll, claims, options());
  return report_sweep(rep, detail);
}

// 4. Diameter range and the diameter-3 size bound for 3_t-critical graphs.
bool criterion4(std::string& detail) {
  ClaimId claims[] = {ClaimId::kThm23, ClaimId::kThm24};
  SweepReport rep = sweep_range(2, 8, Filter::kTtc3, claims, options());
  return report_sweep(rep, detail);
}

// 5. Quasi-edge structure: existence, association uniqueness, the
// counting inequality for |S| <= 2, and V - N[v] quasi-cliques.
bool criterion5(std::string& detail) {
  ClaimId claims[] = {ClaimId::kLem31, ClaimId::kDef32Inj, ClaimId::kLem33, ClaimId::kLem34};
  SweepReport rep = sweep_range(2, 8, Filter::kTtc3, claims, options());
  return report_sweep(rep, detail);
}

// 6. Main bound theorems in their applicable regimes, including the
// intermediate edge bound from the minimum-degree argument.
bool criterion6(std::string& detail) {
  ClaimId ttc_claims[] = {ClaimId::kThm35, ClaimId::kThm25a, ClaimId::kThm25b};
  SweepReport rep1 = sweep_range(2, 8, Filter::kTtc3, ttc_claims, options());
  bool ok = report_sweep(rep1, detail);

  ClaimId d2c_claims[] = {ClaimId::kThm36};
  SweepReport rep2 = sweep_range(3, 9, Filter::kDiameter2Critical, d2c_claims, options());
  ok = report_sweep(rep2, detail) && ok;

  // Minimum observed slack of m >= delta + (delta^2-2delta)/c + C(n-1-delta,2).
  double min_slack = 1e9;
  for (int n = 2; n <= 8; ++n) {
    EnumerationTask t;
    t.n = n;
    t.filter = Filter::kTtc3;
    generate(t, [&](const Graph& g) {
      double slack =
          g.size() - theorem35_intermediate_rhs(g.order(), degree_extremes(g).first);
      if (slack < min_slack) min_slack = slack;
      if (slack < -1e-9) ok = false;
    });
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, " min_intermediate_slack=%.6f", min_slack);
  detail += buf;
  return ok;
}

// 7. Numeric suite: constants, appendix lemmas, closed-form agreement.
bool criterion7(std::string& detail) {
  const Constants& k = constants();
  bool ok = k.residual_c < 1e-12 && k.residual_a < 1e-12 && k.closed_form_gap < 1e-12;
  ok = ok && std::fabs(k.a - (std::sqrt(2.0) - std::sqrt(2.0 - std::sqrt(2.0))) / 2.0) < 1e-12;

  double g3 = eval_g_A1(3);
  ok = ok && std::fabs(g3 - 0.025) <= 0.005;

  SweepReport rep = run_numeric_claims({3, 10000});
  ok = ok && rep.total_violations() == 0;

  double worst = 0;
  for (long long n = 3; n <= 100; ++n) {
    double closed = (3.0 * std::sqrt(2.0) - 4.0) * (static_cast<double>(n) - 2.0) / 2.0;
    worst = std::max(worst, std::fabs(eval_f_A2(n) - closed));
  }
  ok = ok && worst < 1e-9;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "residual_c=%.2e residual_a=%.2e g(3)=%.5f a2_gap=%.2e violations=%" PRIu64,
                k.residual_c, k.residual_a, g3, worst, rep.total_violations());
  detail = buf;
  return ok;
}

// 8. Exact solvers equal the 2^n subset oracle.
bool criterion8(std::string& detail) {
  std::uint64_t graphs = 0;
  bool ok = true;

  auto check_graph = [&](const Graph& g) {
    ++graphs;
    auto od = oracle_domination(g);
    DominationResult d = domination_number(g);
    if (d.number != od.number || !d.witness || mask_of(*d.witness) != od.witness_mask) ok = false;

    auto ot = oracle_total_domination(g);
    DominationResult t = total_domination_number(g);
    if (ot.number < 0) {
      if (!t.is_infinite()) ok = false;
    } else if (t.number != ot.number || !t.witness || mask_of(*t.witness) != ot.witness_mask) {
      ok = false;
    }
  };

  for (int n = 1; n <= 6; ++n) {
    EnumerationTask t;
    t.n = n;
    generate(t, check_graph);
  }
  std::uint64_t classes = graphs;

  std::mt19937_64 rng(0xD2C0FFEE);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    check_graph(g);
  }
  detail = "classes=" + std::to_string(classes) + " random=1000 total=" + std::to_string(graphs);
  return ok;
}

// 9. Generator counts match the label-space dedupe oracle; partition
// totals equal unpartitioned totals for every filter.
bool criterion9(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    EnumerationTask t;
    t.n = n;
    std::uint64_t all = generate(t, nullptr);
    t.filter = Filter::kConnected;
    std::uint64_t conn = generate(t, nullptr);
    std::uint64_t oracle_all = oracle_class_count(n, false);
    std::uint64_t oracle_conn = oracle_class_count(n, true);
    if (all != oracle_all || conn != oracle_conn) {
      ok = false;
      detail += " mismatch at n=" + std::to_string(n);
    }
    detail += " n" + std::to_string(n) + "=" + std::to_string(all) + "/" + std::to_string(conn);
  }

  for (Filter f : {Filter::kAll, Filter::kConnected, Filter::kDiameter2,
                   Filter::kDiameter2Critical, Filter::kTtc3, Filter::kSuper4}) {
    EnumerationTask whole;
    whole.n = 7;
    whole.filter = f;
    std::uint64_t expected = generate(whole, nullptr);
    std::uint64_t split_total = 0;
    std::uint64_t roots = count_at_order(4);  // 11
    std::uint64_t step = 3;
    for (std::uint64_t lo = 0; lo < roots; lo += step) {
      EnumerationTask part = whole;
      part.partition = Partition{4, lo, std::min(roots, lo + step)};
      split_total += generate(part, nullptr);
    }
    if (split_total != expected) {
      ok = false;
      detail += std::string(" partition mismatch filter=") + filter_name(f);
    }
  }
  return ok;
}

// 10. graph6 codec: bit-exact round trips and the malformed corpus.
bool criterion10(std::string& detail) {
  bool ok = true;
  std::uint64_t graphs = 0;
  for (int n = 1; n <= 8; ++n) {
    EnumerationTask t;
    t.n = n;
    generate(t, [&](const Graph& g) {
      ++graphs;
      std::string s = encode_graph6(g);
      Graph back = decode_graph6(s);
      if (!(back == g) || encode_graph6(back) != s) ok = false;
    });
  }

  const char* malformed[] = {"", "~", "~??", "B", "Bww", "B:", "B\x7f", "\x20w", "Bx", "By"};
  int rejected = 0;
  for (const char* bad : malformed) {
    try {
      decode_graph6(bad);
    } catch (const std::invalid_argument&) {
      ++rejected;
      continue;
    }
    ok = false;
    detail += std::string(" accepted \"") + bad + "\"";
  }
  detail = "round_trips=" + std::to_string(graphs) +
           " malformed_rejected=" + std::to_string(rejected) + "/10" + detail;
  return ok;
}

}  // namespace

int main() {
  g_jobs = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));

  struct Criterion {
    int id;
    const char* title;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "Murty-Simon bound, diameter-2-critical n=3..9", criterion1},
      {2, "complement duality bijection n=3..8", criterion2},
      {3, "4_t-supercritical characterization n<=8", criterion3},
      {4, "3_t-critical diameter range and size bound n<=8", criterion4},
      {5, "quasi-edge structure sweeps n<=8", criterion5},
      {6, "main bound theorems in applicable regimes", criterion6},
      {7, "numeric constants and appendix lemmas", criterion7},
      {8, "solvers equal the subset oracle", criterion8},
      {9, "enumeration equals the dedupe oracle", criterion9},
      {10, "graph6 codec round trips and rejections", criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = c.run(detail);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] criterion %2d: %s (%s) [%lldms]\n", ok ? "PASS" : "FAIL", c.id, c.title,
                detail.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
