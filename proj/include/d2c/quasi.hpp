#ifndef D2C_QUASI_HPP
#define D2C_QUASI_HPP

#include <utility>
#include <vector>

#include "d2c/graph.hpp"

namespace d2c {

/// Witness for a nonadjacent pair in a 3_t-critical graph: the edge
/// {anchor, helper} dominates everything except the supplement, which is
/// the pair's other vertex. The same underlying edge may serve different
/// pairs, so the association travels with the edge.
struct QuasiEdge {
  int anchor = -1;      // endpoint shared by the edge and the pair
  int helper = -1;      // other edge endpoint, adjacent to anchor only
  int supplement = -1;  // unique vertex left undominated by the edge

  std::pair<int, int> edge() const { return {std::min(anchor, helper), std::max(anchor, helper)}; }
  std::pair<int, int> pair() const {
    return {std::min(anchor, supplement), std::max(anchor, supplement)};
  }
};

/// All quasi-edges of the nonadjacent pair {u, v}, both orientations
/// (anchored at u with supplement v, and anchored at v with supplement u).
/// Throws when u == v or u, v are adjacent. In a 3_t-critical graph the
/// result is nonempty whenever {u, v} does not dominate G; pairs that do
/// dominate may legitimately have no witness ({u,v} itself is then the
/// total dominating pair of G+uv).
std::vector<QuasiEdge> find_quasi_edges(const Graph& g, int u, int v);

/// True iff every nonadjacent pair inside s has at least one quasi-edge
/// and every quasi-edge of such a pair has an endpoint outside s.
bool is_quasi_clique(const Graph& g, const VertexSet& s);

/// Edges of the induced subgraph on s plus all quasi-edges of nonadjacent
/// pairs inside s, deduplicated and sorted. Throws when s is not a
/// quasi-clique.
std::vector<std::pair<int, int>> associated_edges(const Graph& g, const VertexSet& s);

/// E(G;A,B): edges {x,y}, x in A, y in B, that are quasi-edges associated
/// with a nonadjacent pair {x,c}, c in A. Each member records its one
/// association; several members may share a pair (both sides of a pair
/// can land in B, and one side may offer several helpers), so the edge
/// count and the distinct-pair count are reported separately.
struct QuasiEdgeFamily {
  std::vector<QuasiEdge> members;

  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const { return static_cast<int>(members.size()); }
  /// Distinct unordered associated pairs among the members.
  int distinct_pair_count() const;
};

/// Throws when a and b intersect.
QuasiEdgeFamily quasi_edge_family(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Intersection of the open neighborhoods of all members of s; throws on
/// empty s.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

struct Lemma33Result {
  int star_size = 0;       // |S*|
  int induced_edges = 0;   // |E(G[S*])|
  int family_edges = 0;    // |E(G; S*, V - (S* u S))|
  double rhs = 0;          // (|S*|^2 - 2|S*|) / c
  bool holds = false;      // lhs >= rhs

  int lhs() const { return induced_edges + family_edges; }
};

/// Counting inequality for S* = common neighborhood of s. check_lemma33
/// verifies that g is 3_t-critical and throws otherwise; lemma33_counts
/// trusts the caller.
Lemma33Result check_lemma33(const Graph& g, const VertexSet& s);
Lemma33Result lemma33_counts(const Graph& g, const VertexSet& s);

/// V - N[v] is a quasi-clique. check_lemma34 verifies 3_t-criticality and
/// the vertex range; lemma34_holds trusts the caller.
bool check_lemma34(const Graph& g, int v);
bool lemma34_holds(const Graph& g, int v);

}  // namespace d2c

#endif
