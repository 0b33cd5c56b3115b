#ifndef D2C_ENUMERATE_HPP
#define D2C_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

/// Permutation-invariant representative: the minimum upper-triangle bit
/// string of the adjacency matrix over all vertex labelings, column-major
/// order (0,1),(0,2),(1,2),(0,3),... packed MSB-first per word. Equal
/// forms == isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<Word> bits;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph from_canonical(const CanonicalForm& cf);

enum class Filter { kAll, kConnected, kDiameter2, kDiameter2Critical, kTtc3, kSuper4 };

const char* filter_name(Filter f);
std::optional<Filter> filter_from_name(std::string_view name);

bool passes_filter(const Graph& g, Filter f);

/// Restricts generation to the subforest rooted at the canonical graphs
/// of order `level` whose deterministic index falls in [lo, hi).
struct Partition {
  int level = 1;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct EnumerationTask {
  int n = 1;
  Filter filter = Filter::kAll;
  std::optional<Partition> partition;
  bool override_guard = false;  // lifts the n <= 10 resource guard
};

using GraphSink = std::function<void(const Graph&)>;

/// Emits exactly one representative per isomorphism class of order task.n
/// passing the filter, in deterministic order; returns the count emitted.
/// Extension is by one vertex at a time, keeping a child only when it is
/// already minimally labeled, so each class appears exactly once.
std::uint64_t generate(const EnumerationTask& task, const GraphSink& sink);

/// Number of isomorphism classes of the given order (no filter).
std::uint64_t count_at_order(int order);

}  // namespace d2c

#endif
