#include "d2c/domination.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace d2c {

namespace {

std::atomic<std::uint64_t> g_solver_calls{0};

bool covers_all_of(const Graph& g, const VertexSet& x, const VertexSet& targets) {
  bool ok = true;
  targets.for_each([&](int u) {
    if (ok && !bitops::intersects(g.row(u), x.words())) ok = false;
  });
  return ok;
}

// ---------------------------------------------------------------------
// Minimum set cover over symmetric coverage rows. cover[v] is the set of
// vertices covered when v is chosen; by symmetry of the adjacency matrix,
// cover[u] is also the candidate set of vertices able to cover u. Total
// domination uses open neighborhoods, plain domination closed ones.
// Mask64 serves n <= 64; MaskVec is the correct-for-any-n fallback.
// ---------------------------------------------------------------------

struct Mask64 {
  Word w = 0;

  static Mask64 none(int) { return {0}; }
  static Mask64 full(int n) { return {n >= 64 ? ~Word{0} : (Word{1} << n) - 1}; }

  bool contains(const Mask64& o) const { return (o.w & ~w) == 0; }
  bool test(int v) const { return (w >> v) & 1; }
  void set(int v) { w |= Word{1} << v; }
  int count() const { return std::popcount(w); }
  bool empty() const { return w == 0; }
  Mask64 minus(const Mask64& o) const { return {w & ~o.w}; }
  Mask64 intersect(const Mask64& o) const { return {w & o.w}; }
  Mask64 unite(const Mask64& o) const { return {w | o.w}; }
  int first() const { return w ? std::countr_zero(w) : -1; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    Word x = w;
    while (x) {
      fn(std::countr_zero(x));
      x &= x - 1;
    }
  }
};

struct MaskVec {
  std::vector<Word> w;

  static MaskVec none(int n) { return {std::vector<Word>(words_for(n), 0)}; }
  static MaskVec full(int n) {
    MaskVec m = none(n);
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }

  bool contains(const MaskVec& o) const { return bitops::is_subset(o.w, w); }
  bool test(int v) const { return bitops::test(w, v); }
  void set(int v) { bitops::set(w, v); }
  int count() const { return bitops::count(w); }
  bool empty() const { return !bitops::any(w); }
  MaskVec minus(const MaskVec& o) const {
    MaskVec r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  MaskVec intersect(const MaskVec& o) const {
    MaskVec r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  MaskVec unite(const MaskVec& o) const {
    MaskVec r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= o.w[i];
    return r;
  }
  int first() const { return bitops::first(w); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    bitops::for_each(std::span<const Word>(w), fn);
  }
};

template <class M>
struct CoverSolver {
  int n;
  std::vector<M> cover;
  M universe;
  int best;  // size of the best cover known so far

  explicit CoverSolver(const Graph& g, bool closed)
      : n(g.order()), universe(M::full(g.order())), best(0) {
    cover.reserve(n);
    for (int v = 0; v < n; ++v) {
      M m = M::none(n);
      bitops::for_each(g.row(v), [&](int u) { m.set(u); });
      if (closed) m.set(v);
      cover.push_back(m);
    }
  }

  int lower_bound(const M& uncovered) const {
    int need = uncovered.count();
    if (need == 0) return 0;
    int widest = 0;
    for (int v = 0; v < n; ++v)
      widest = std::max(widest, cover[v].intersect(uncovered).count());
    if (widest == 0) return best + 1;  // uncoverable
    return (need + widest - 1) / widest;
  }

  int greedy() const {
    M covered = M::none(n);
    int k = 0;
    while (!covered.contains(universe)) {
      int pick = -1, gain = 0;
      for (int v = 0; v < n; ++v) {
        int d = cover[v].intersect(universe.minus(covered)).count();
        if (d > gain) {
          gain = d;
          pick = v;
        }
      }
      if (pick < 0) return -1;  // isolated target, infeasible
      covered = covered.unite(cover[pick]);
      ++k;
    }
    return k;
  }

  void dfs(const M& chosen, const M& covered, int k) {
    if (covered.contains(universe)) {
      best = std::min(best, k);
      return;
    }
    M uncovered = universe.minus(covered);
    if (k + lower_bound(uncovered) >= best) return;

    // Branch on the uncovered vertex with the fewest possible coverers.
    int target = -1, fewest = n + 1;
    uncovered.for_each([&](int u) {
      int c = cover[u].count();
      if (c < fewest) {
        fewest = c;
        target = u;
      }
    });
    if (target < 0 || fewest == 0) return;

    // Try coverers greedily: most newly covered vertices first.
    std::vector<std::pair<int, int>> cands;
    cands.reserve(fewest);
    cover[target].for_each([&](int w) {
      cands.emplace_back(-cover[w].intersect(uncovered).count(), w);
    });
    std::sort(cands.begin(), cands.end());
    for (auto [neg, w] : cands) {
      (void)neg;
      M c2 = chosen;
      c2.set(w);
      dfs(c2, covered.unite(cover[w]), k + 1);
    }
  }

  // Exact minimum if <= cap, else cap+1 (infeasible included).
  int solve(int cap) {
    g_solver_calls.fetch_add(1, std::memory_order_relaxed);
    if (universe.empty()) return 0;
    int g0 = greedy();
    if (g0 < 0) return cap + 1;
    best = std::min(g0, cap + 1);  // greedy cover is an upper bound
    dfs(M::none(n), M::none(n), 0);
    return best > cap ? cap + 1 : best;
  }

  // Numerically smallest mask among covers of size exactly k. Decides
  // vertices from high index to low, exclusion first, so the first
  // complete cover found has the smallest mask value.
  bool lexmin(int k, M& out) {
    M chosen = M::none(n), covered = M::none(n), avail = universe;
    return lexmin_step(n - 1, chosen, covered, avail, 0, k, out);
  }

  bool lexmin_step(int v, M& chosen, M& covered, M& avail, int taken, int k, M& out) {
    if (taken > k) return false;
    if (v < 0) {
      if (taken == k && covered.contains(universe)) {
        out = chosen;
        return true;
      }
      return false;
    }
    // Remaining slots must suffice, and every uncovered vertex must keep
    // a live candidate among chosen-or-still-available vertices.
    if (taken + v + 1 < k) return false;
    M uncovered = universe.minus(covered);
    bool feasible = true;
    int widest = 1;
    uncovered.for_each([&](int u) {
      int c = cover[u].intersect(avail).count();
      if (c == 0) feasible = false;
      });
    if (!feasible) return false;
    for (int w = 0; w <= v; ++w)
      widest = std::max(widest, cover[w].intersect(uncovered).count());
    if (taken + (uncovered.count() + widest - 1) / widest > k) return false;

    M avail_without = avail.minus([&] {
      M m = M::none(n);
      m.set(v);
      return m;
    }());

    // Exclude v first: smaller mask values.
    if (lexmin_step(v - 1, chosen, covered, avail_without, taken, k, out)) return true;

    M chosen2 = chosen;
    chosen2.set(v);
    M covered2 = covered.unite(cover[v]);
    return lexmin_step(v - 1, chosen2, covered2, avail_without, taken + 1, k, out);
  }
};

template <class M>
DominationResult solve_with_witness(const Graph& g, bool closed) {
  CoverSolver<M> solver(g, closed);
  int n = g.order();
  int value = solver.solve(n);
  if (value > n) return {};  // infinite (isolated vertex, total case)
  M wmask = M::none(n);
  bool ok = solver.lexmin(value, wmask);
  assert(ok);
  (void)ok;
  VertexSet witness(n);
  wmask.for_each([&](int v) { witness.set(v); });
  DominationResult r;
  r.number = value;
  r.witness = std::move(witness);
  return r;
}

template <class M>
int solve_value(const Graph& g, bool closed, int cap) {
  CoverSolver<M> solver(g, closed);
  return solver.solve(cap);
}

DominationResult solve_dispatch(const Graph& g, bool closed) {
  if (g.order() == 0) throw std::invalid_argument("domination: empty graph");
  return g.order() <= 64 ? solve_with_witness<Mask64>(g, closed)
                         : solve_with_witness<MaskVec>(g, closed);
}

}  // namespace

bool dominates(const Graph& g, const VertexSet& x, const VertexSet& y) {
  assert(x.universe() == g.order() && y.universe() == g.order());
  VertexSet rest = y;
  rest.remove(x);
  return covers_all_of(g, x, rest);
}

bool totally_dominates(const Graph& g, const VertexSet& x, const VertexSet& y) {
  assert(x.universe() == g.order() && y.universe() == g.order());
  return covers_all_of(g, x, y);
}

DominationResult domination_number(const Graph& g) { return solve_dispatch(g, true); }

DominationResult total_domination_number(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("total_domination_number: empty graph");
  if (g.has_isolated_vertex()) return {};
  return solve_dispatch(g, false);
}

int domination_value(const Graph& g, int cap) {
  if (g.order() == 0) throw std::invalid_argument("domination_value: empty graph");
  return g.order() <= 64 ? solve_value<Mask64>(g, true, cap) : solve_value<MaskVec>(g, true, cap);
}

int total_domination_value(const Graph& g, int cap) {
  if (g.order() == 0) throw std::invalid_argument("total_domination_value: empty graph");
  if (g.has_isolated_vertex()) return cap + 1;
  return g.order() <= 64 ? solve_value<Mask64>(g, false, cap) : solve_value<MaskVec>(g, false, cap);
}

std::uint64_t solver_call_count() { return g_solver_calls.load(std::memory_order_relaxed); }

}  // namespace d2c
