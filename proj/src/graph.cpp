#include "d2c/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace d2c {

VertexSet VertexSet::all(int universe) {
  VertexSet s(universe);
  for (int i = 0; i < words_for(universe); ++i) s.w_[i] = ~Word{0};
  if (universe % kWordBits != 0 && universe > 0)
    s.w_.back() &= (Word{1} << (universe % kWordBits)) - 1;
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
  VertexSet s(universe);
  for (int v : vs) s.set(v);
  return s;
}

bool VertexSet::test(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::test: vertex out of range");
  return bitops::test(w_, v);
}

VertexSet& VertexSet::set(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::set: vertex out of range");
  bitops::set(w_, v);
  return *this;
}

VertexSet& VertexSet::reset(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet::reset: vertex out of range");
  bitops::reset(w_, v);
  return *this;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::contains(const VertexSet& other) const {
  assert(n_ == other.n_);
  return bitops::is_subset(other.w_, w_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(n_ == other.n_);
  return bitops::intersects(w_, other.w_);
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::remove(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

VertexSet VertexSet::complemented() const {
  VertexSet out = all(n_);
  out.remove(*this);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

std::string Distance::to_string() const {
  return is_infinite() ? "inf" : std::to_string(v_);
}

Graph::Graph(int n) : n_(n), w_(words_for(n)), rows_(static_cast<std::size_t>(n) * words_for(n), 0) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return bitops::test(row(u), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return bitops::count(row(v));
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

VertexSet Graph::closed_neighbors(int v) const {
  VertexSet s = neighbors(v);
  s.set(v);
  return s;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph::add_edge: loop edge");
  if (adjacent(u, v)) return;
  bitops::set({rows_.data() + static_cast<std::size_t>(u) * w_, static_cast<std::size_t>(w_)}, v);
  bitops::set({rows_.data() + static_cast<std::size_t>(v) * w_, static_cast<std::size_t>(w_)}, u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return;
  bitops::reset({rows_.data() + static_cast<std::size_t>(u) * w_, static_cast<std::size_t>(w_)}, v);
  bitops::reset({rows_.data() + static_cast<std::size_t>(v) * w_, static_cast<std::size_t>(w_)}, u);
  --m_;
}

Graph Graph::plus_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::minus_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    bitops::for_each(row(u), [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (!bitops::any(row(v))) return true;
  return false;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

namespace {

// BFS from src; fills level masks into dist (entries untouched stay -1).
// Returns the set of reached vertices.
VertexSet bfs_reach(const Graph& g, int src, std::vector<int>* dist_out) {
  int n = g.order();
  VertexSet visited(n);
  visited.set(src);
  VertexSet frontier(n);
  frontier.set(src);
  if (dist_out) (*dist_out)[src] = 0;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    VertexSet next(n);
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next.remove(visited);
    if (dist_out)
      next.for_each([&](int v) { (*dist_out)[v] = level; });
    visited |= next;
    frontier = next;
  }
  return visited;
}

}  // namespace

Distance distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("distance: vertex out of range");
  if (u == v) return Distance::finite(0);
  std::vector<int> dist(g.order(), -1);
  bfs_reach(g, u, &dist);
  return dist[v] < 0 ? Distance::infinite() : Distance::finite(dist[v]);
}

// Eccentricity of src, or infinite when src does not reach every vertex.
static Distance eccentricity(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  VertexSet reached = bfs_reach(g, src, &dist);
  if (reached.count() != g.order()) return Distance::infinite();
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  return Distance::finite(ecc);
}

Distance diameter(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
  Distance diam = Distance::finite(0);
  for (int v = 0; v < g.order(); ++v) {
    Distance e = eccentricity(g, v);
    if (e.is_infinite()) return Distance::infinite();
    diam = std::max(diam, e);
  }
  return diam;
}

bool diameter_exceeds(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    Distance e = eccentricity(g, v);
    if (e.is_infinite() || e.value() > k) return true;
  }
  return false;
}

std::pair<int, int> degree_extremes(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("degree_extremes: empty graph");
  int lo = g.order(), hi = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return bfs_reach(g, 0, nullptr).count() == g.order();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (seen.test(v)) continue;
    VertexSet comp = bfs_reach(g, v, nullptr);
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

int edge_count_within(const Graph& g, const VertexSet& s) {
  int total = 0;
  s.for_each([&](int u) {
    auto r = g.row(u);
    for (std::size_t i = 0; i < r.size(); ++i) total += std::popcount(r[i] & s.words()[i]);
  });
  return total / 2;
}

}  // namespace d2c
