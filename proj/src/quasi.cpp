#include "d2c/quasi.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "d2c/bounds.hpp"
#include "d2c/criticality.hpp"

namespace d2c {

namespace {

// Vertices left undominated by {x, y}: outside the edge and without a
// neighbor in it.
VertexSet undominated_by_edge(const Graph& g, int x, int y) {
  VertexSet covered = g.neighbors(x);
  covered |= g.neighbors(y);
  covered.set(x).set(y);
  return covered.complemented();
}

void require_ttc3(const Graph& g, const char* who) {
  if (!is_kt_critical(g, 3))
    throw std::invalid_argument(std::string(who) + ": graph is not 3_t-critical");
}

}  // namespace

std::vector<QuasiEdge> find_quasi_edges(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("find_quasi_edges: vertex out of range");
  if (u == v) throw std::invalid_argument("find_quasi_edges: vertices coincide");
  if (g.adjacent(u, v)) throw std::invalid_argument("find_quasi_edges: pair is adjacent");

  std::vector<QuasiEdge> out;
  for (auto [anchor, other] : {std::pair{u, v}, std::pair{v, u}}) {
    g.neighbors(anchor).for_each([&](int w) {
      if (w == other || g.adjacent(w, other)) return;
      VertexSet rest = undominated_by_edge(g, anchor, w);
      // `other` is always in rest here; a quasi-edge leaves exactly it.
      if (rest.count() == 1) out.push_back({anchor, w, other});
    });
  }
  return out;
}

bool is_quasi_clique(const Graph& g, const VertexSet& s) {
  assert(s.universe() == g.order());
  auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int x = members[i], y = members[j];
      if (g.adjacent(x, y)) continue;
      auto qes = find_quasi_edges(g, x, y);
      if (qes.empty()) return false;
      for (const QuasiEdge& qe : qes)
        if (s.test(qe.anchor) && s.test(qe.helper)) return false;
    }
  return true;
}

std::vector<std::pair<int, int>> associated_edges(const Graph& g, const VertexSet& s) {
  if (!is_quasi_clique(g, s))
    throw std::invalid_argument("associated_edges: set is not a quasi-clique");
  std::set<std::pair<int, int>> acc;
  auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int x = members[i], y = members[j];
      if (g.adjacent(x, y)) {
        acc.insert({x, y});
        continue;
      }
      for (const QuasiEdge& qe : find_quasi_edges(g, x, y)) acc.insert(qe.edge());
    }
  return {acc.begin(), acc.end()};
}

std::vector<std::pair<int, int>> QuasiEdgeFamily::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(members.size());
  for (const QuasiEdge& qe : members) out.push_back(qe.edge());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int QuasiEdgeFamily::distinct_pair_count() const {
  std::set<std::pair<int, int>> pairs;
  for (const QuasiEdge& qe : members) pairs.insert(qe.pair());
  return static_cast<int>(pairs.size());
}

QuasiEdgeFamily quasi_edge_family(const Graph& g, const VertexSet& a, const VertexSet& b) {
  assert(a.universe() == g.order() && b.universe() == g.order());
  if (a.intersects(b)) throw std::invalid_argument("quasi_edge_family: sets intersect");

  QuasiEdgeFamily fam;
  a.for_each([&](int x) {
    VertexSet targets = g.neighbors(x);
    targets &= b;
    targets.for_each([&](int y) {
      VertexSet rest = undominated_by_edge(g, x, y);
      if (rest.count() != 1) return;
      int c = rest.first();
      if (c != x && a.test(c)) fam.members.push_back({x, y, c});
    });
  });
  return fam;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  assert(s.universe() == g.order());
  if (s.empty()) throw std::invalid_argument("common_neighborhood: empty set");
  VertexSet acc = VertexSet::all(g.order());
  s.for_each([&](int v) { acc &= g.neighbors(v); });
  return acc;
}

Lemma33Result lemma33_counts(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("lemma33_counts: empty set");
  VertexSet star = common_neighborhood(g, s);
  VertexSet rest = VertexSet::all(g.order());
  rest.remove(star);
  rest.remove(s);

  Lemma33Result r;
  r.star_size = star.count();
  r.induced_edges = edge_count_within(g, star);
  r.family_edges = quasi_edge_family(g, star, rest).edge_count();
  r.rhs = (static_cast<double>(r.star_size) * r.star_size - 2.0 * r.star_size) / constants().c;
  r.holds = static_cast<double>(r.lhs()) >= r.rhs - 1e-12;
  return r;
}

Lemma33Result check_lemma33(const Graph& g, const VertexSet& s) {
  require_ttc3(g, "check_lemma33");
  return lemma33_counts(g, s);
}

bool lemma34_holds(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("lemma34: vertex out of range");
  VertexSet outside = g.closed_neighbors(v).complemented();
  return is_quasi_clique(g, outside);
}

bool check_lemma34(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("check_lemma34: vertex out of range");
  require_ttc3(g, "check_lemma34");
  return lemma34_holds(g, v);
}

}  // namespace d2c
