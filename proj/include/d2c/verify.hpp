#ifndef D2C_VERIFY_HPP
#define D2C_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "d2c/bounds.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/graph.hpp"

namespace d2c {

enum class ClaimId {
  kConj11,
  kThm21,
  kThm22,
  kThm23,
  kThm24,
  kThm25a,
  kThm25b,
  kLem31,
  kDef32Inj,
  kLem33,
  kLem34,
  kThm35,
  kThm36,
  kLemA1,
  kLemA2,
};

enum class ClaimScope { kPerGraph, kNumeric };

struct ClaimInfo {
  ClaimId id;
  ClaimScope scope;
  const char* name;      // report spelling, e.g. "THM_2_1"
  const char* cli_name;  // flag spelling, e.g. "thm_2_1"
  const char* summary;
};

std::span<const ClaimInfo> claim_registry();
const ClaimInfo& claim_info(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);
std::vector<ClaimId> per_graph_claims();

/// Outcome of one claim on one graph. Vacuous truth is explicit:
/// holds is true whenever applicable is false, and a witness is present
/// exactly when the claim fails.
struct Verdict {
  ClaimId id = ClaimId::kConj11;
  std::string graph6;
  bool applicable = false;
  bool holds = true;
  std::string witness;
};

/// Lazily computed, memoized facts about one graph; lets a batch of
/// claims share the expensive criticality predicates.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g, double thm36_threshold = constants().threshold);

  const Graph& graph() const { return g_; }
  int n() const { return g_.order(); }
  long long m() const { return g_.size(); }
  double thm36_threshold() const { return threshold_; }

  int min_degree();
  int max_degree();
  Distance diam();
  bool d2c();
  bool ttc3();
  bool super4();
  const Graph& complement_graph();
  bool complement_ttc3();
  bool complement_super4();

 private:
  const Graph& g_;
  double threshold_;
  std::optional<std::pair<int, int>> degrees_;
  std::optional<Distance> diam_;
  std::optional<bool> d2c_, ttc3_, super4_, co_ttc3_, co_super4_;
  std::optional<Graph> complement_;
};

/// Evaluates a per-graph claim; throws std::invalid_argument for the
/// numeric-scope claims.
Verdict run_claim(ClaimId id, const Graph& g);
Verdict run_claim(ClaimId id, GraphFacts& facts);

struct ClaimTally {
  std::uint64_t checked = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
};

struct Counterexample {
  ClaimId id;
  std::string graph6;
  std::string detail;
};

struct SweepReport {
  std::string task;
  std::vector<std::pair<ClaimId, ClaimTally>> tallies;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::string>> extras;  // numeric report lines
  std::uint64_t solver_calls = 0;
  std::uint64_t runtime_ms = 0;

  std::uint64_t total_violations() const;
};

/// Fixed-field text serialization (claim_id/checked/applicable/violations,
/// counterexamples[], solver_calls, runtime_ms). Deterministic except for
/// the runtime_ms line.
std::string to_text(const SweepReport& report);

struct SweepOptions {
  int jobs = 1;
  bool override_guard = false;
  double thm36_threshold = constants().threshold;
};

/// Runs the claims over every generated graph, never stopping early;
/// counterexamples are collected and sorted so output does not depend on
/// worker scheduling.
SweepReport sweep(const EnumerationTask& task, std::span<const ClaimId> claims,
                  const SweepOptions& options = {});

/// Same, merged over orders n_lo..n_hi.
SweepReport sweep_range(int n_lo, int n_hi, Filter filter, std::span<const ClaimId> claims,
                        const SweepOptions& options = {});

struct NumericOptions {
  long long lo = 3;
  long long hi = 10000;
};

/// Executes the numeric-scope claims (appendix lemmas plus the constants
/// invariants) and reports residuals and minima in the extras fields.
SweepReport run_numeric_claims(const NumericOptions& options = {});

}  // namespace d2c

#endif
