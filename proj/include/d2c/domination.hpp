#ifndef D2C_DOMINATION_HPP
#define D2C_DOMINATION_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "d2c/graph.hpp"

namespace d2c {

/// True iff every vertex of y not in x has a neighbor in x.
bool dominates(const Graph& g, const VertexSet& x, const VertexSet& y);

/// True iff every vertex of y (members of x included) has a neighbor in x.
bool totally_dominates(const Graph& g, const VertexSet& x, const VertexSet& y);

struct DominationResult {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  int number = kInfinite;
  std::optional<VertexSet> witness;  // present iff number is finite

  bool is_infinite() const { return number == kInfinite; }
};

/// Exact minimum dominating set. Always finite. Among minimum witnesses the
/// numerically smallest bit mask is returned (vertex 0 = lowest bit).
DominationResult domination_number(const Graph& g);

/// Exact minimum total dominating set; infinite iff g has an isolated
/// vertex. Witness ties break to the numerically smallest mask.
DominationResult total_domination_number(const Graph& g);

/// Value-only solvers for tight loops: the exact number if it is <= cap,
/// otherwise cap+1 (which also covers the infinite case).
int domination_value(const Graph& g, int cap);
int total_domination_value(const Graph& g, int cap);

/// Number of branch-and-bound solver invocations so far (process-wide).
std::uint64_t solver_call_count();

}  // namespace d2c

#endif
