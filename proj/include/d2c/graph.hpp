#ifndef D2C_GRAPH_HPP
#define D2C_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "d2c/bitops.hpp"

namespace d2c {

/// Subset of the vertices 0..n-1 of some graph, stored as a bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {}

  static VertexSet all(int universe);
  static VertexSet of(int universe, std::initializer_list<int> vs);

  int universe() const { return n_; }
  bool test(int v) const;
  VertexSet& set(int v);
  VertexSet& reset(int v);

  int count() const { return bitops::count(w_); }
  bool empty() const { return !bitops::any(w_); }
  int first() const { return bitops::first(w_); }
  std::vector<int> to_vector() const;

  bool contains(const VertexSet& other) const;  // superset (>=)
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& remove(const VertexSet& o);  // set difference
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  /// All vertices of the universe not in this set.
  VertexSet complemented() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    bitops::for_each(std::span<const Word>(w_), fn);
  }

  bool operator==(const VertexSet&) const = default;

  /// Numeric order on the mask value (vertex 0 = least significant bit).
  static bool mask_less(const VertexSet& a, const VertexSet& b) {
    return bitops::mask_less(a.w_, b.w_);
  }

  std::span<const Word> words() const { return w_; }
  std::span<Word> words() { return w_; }

  std::string to_string() const;  // "{0,2,3}"

 private:
  int n_ = 0;
  std::vector<Word> w_;
};

/// Hop count between two vertices; infinite() for unreachable pairs and
/// for the diameter of disconnected graphs. Infinite compares greater
/// than every finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  static constexpr Distance finite(int d) { return Distance(d); }
  static constexpr Distance infinite() { return Distance(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr int value() const { return v_; }
  constexpr auto operator<=>(const Distance&) const = default;
  constexpr bool operator==(const Distance&) const = default;
  friend constexpr bool operator<(Distance d, int k) { return d.v_ < k; }
  friend constexpr bool operator>(Distance d, int k) { return d.v_ > k; }
  friend constexpr bool operator==(Distance d, int k) { return d.v_ == k; }

  std::string to_string() const;  // "3" or "inf"

 private:
  explicit constexpr Distance(int v) : v_(v) {}
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_ = kInf;
};

/// Simple undirected graph on vertices 0..n-1. Row u is the open
/// neighborhood N(u) as a bit mask; the matrix stays symmetric and
/// loop-free by construction. Immutable use after building is safe to
/// share across threads.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const { return m_; }  // number of edges
  int words_per_row() const { return w_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::span<const Word> row(int v) const { return {rows_.data() + static_cast<std::size_t>(v) * w_, static_cast<std::size_t>(w_)}; }

  VertexSet neighbors(int v) const;
  VertexSet closed_neighbors(int v) const;

  void add_edge(int u, int v);     // duplicates collapse; throws on loop/range
  void remove_edge(int u, int v);  // removing a missing edge is a no-op

  Graph plus_edge(int u, int v) const;
  Graph minus_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  bool has_isolated_vertex() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int w_ = 0;
  int m_ = 0;
  std::vector<Word> rows_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complement(const Graph& g);

Distance distance(const Graph& g, int u, int v);
Distance diameter(const Graph& g);

/// True iff some pair of vertices is at distance > k (disconnection counts).
bool diameter_exceeds(const Graph& g, int k);

/// (min degree, max degree); throws on the empty graph.
std::pair<int, int> degree_extremes(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// Number of edges of the subgraph induced by s.
int edge_count_within(const Graph& g, const VertexSet& s);

}  // namespace d2c

#endif
