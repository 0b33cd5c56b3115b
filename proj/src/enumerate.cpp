#include "d2c/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "d2c/criticality.hpp"
#include "d2c/domination.hpp"

namespace d2c {

namespace {

// Columns pack bit i at position 63-i of word i/64, so comparing words in
// ascending index order is the lexicographic order on the bit string.
inline void col_set(Word* col, int i) { col[i >> 6] |= Word{1} << (63 - (i & 63)); }
inline void col_clear(Word* col, int i) { col[i >> 6] &= ~(Word{1} << (63 - (i & 63))); }
inline bool col_test(const Word* col, int i) { return (col[i >> 6] >> (63 - (i & 63))) & 1; }

inline int col_cmp(const Word* a, const Word* b, int w) {
  for (int i = 0; i < w; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Branch-and-bound search for the minimum-labeling of a graph. Reusable
// across calls; the generator runs it millions of times.
class CanonicalLabeler {
 public:
  // rows: n bit rows of `w` words each. Returns true when the identity
  // labeling is already the minimum over all permutations.
  bool is_minimal(int n, int w, const Word* rows) {
    prepare(n, w, rows);
    abort_on_improve_ = true;
    improved_ = false;
    dfs(0);
    return !improved_;
  }

  // Minimum form as n columns of w words each (column k uses bits 0..k-1).
  void minimal_form(int n, int w, const Word* rows, std::vector<Word>& out) {
    prepare(n, w, rows);
    abort_on_improve_ = false;
    improved_ = false;
    dfs(0);
    out.assign(best_.begin(), best_.begin() + static_cast<std::size_t>(n) * w);
  }

 private:
  void prepare(int n, int w, const Word* rows) {
    n_ = n;
    w_ = w;
    rows_ = rows;
    std::size_t total = static_cast<std::size_t>(n) * w;
    best_.assign(total, 0);
    cols_.assign(total, 0);
    used_.assign(n, 0);
    perm_.assign(n, -1);
    deg_.assign(n, 0);
    if (static_cast<int>(cand_by_level_.size()) < n) cand_by_level_.resize(n);
    for (int v = 0; v < n; ++v) {
      int d = 0;
      for (int i = 0; i < w; ++i) d += std::popcount(rows_[static_cast<std::size_t>(v) * w + i]);
      deg_[v] = d;
    }
    // Seed best with the identity labeling.
    for (int k = 0; k < n; ++k) {
      Word* col = best_.data() + static_cast<std::size_t>(k) * w;
      for (int i = 0; i < k; ++i)
        if (bitops::test({rows_ + static_cast<std::size_t>(k) * w, static_cast<std::size_t>(w)}, i))
          col_set(col, i);
    }
    best_len_ = n;
  }

  bool adjacent(int u, int v) const {
    return bitops::test({rows_ + static_cast<std::size_t>(u) * w_, static_cast<std::size_t>(w_)}, v);
  }

  // Returns true to stop the whole search (canonicity refuted).
  bool dfs(int k) {
    if (k == n_) return false;
    // Candidates: unused vertices ordered by column value, then degree.
    // One buffer per level; recursion below must not disturb this one.
    std::vector<int>& cand = cand_by_level_[k];
    cand.clear();
    for (int x = 0; x < n_; ++x)
      if (!used_[x]) cand.push_back(x);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      int c = col_cmp(cols_.data() + static_cast<std::size_t>(a) * w_,
                      cols_.data() + static_cast<std::size_t>(b) * w_, w_);
      if (c != 0) return c < 0;
      if (deg_[a] != deg_[b]) return deg_[a] < deg_[b];
      return a < b;
    });

    for (int x : cand) {
      const Word* col = cols_.data() + static_cast<std::size_t>(x) * w_;
      Word* bcol = best_.data() + static_cast<std::size_t>(k) * w_;
      int cmp = k >= best_len_ ? -1 : col_cmp(col, bcol, w_);
      if (cmp > 0) break;  // sorted: every later candidate is worse
      if (cmp < 0) {
        if (abort_on_improve_) {
          improved_ = true;
          return true;
        }
        std::copy(col, col + w_, bcol);
        best_len_ = k + 1;
      }
      perm_[k] = x;
      used_[x] = 1;
      for (int y = 0; y < n_; ++y)
        if (!used_[y] && adjacent(x, y)) col_set(cols_.data() + static_cast<std::size_t>(y) * w_, k);
      bool stop = dfs(k + 1);
      for (int y = 0; y < n_; ++y)
        if (!used_[y] && adjacent(x, y)) col_clear(cols_.data() + static_cast<std::size_t>(y) * w_, k);
      used_[x] = 0;
      if (stop) return true;
    }
    return false;
  }

  int n_ = 0, w_ = 0;
  const Word* rows_ = nullptr;
  std::vector<Word> best_, cols_;
  std::vector<char> used_;
  std::vector<int> perm_, deg_;
  std::vector<std::vector<int>> cand_by_level_;
  int best_len_ = 0;
  bool abort_on_improve_ = false;
  bool improved_ = false;
};

thread_local CanonicalLabeler t_labeler;

std::vector<Word> graph_rows(const Graph& g) {
  int n = g.order(), w = g.words_per_row();
  std::vector<Word> rows(static_cast<std::size_t>(n) * w);
  for (int v = 0; v < n; ++v) {
    auto r = g.row(v);
    std::copy(r.begin(), r.end(), rows.begin() + static_cast<std::size_t>(v) * w);
  }
  return rows;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("canonical_form: empty graph");
  int w = g.words_per_row();
  std::vector<Word> rows = graph_rows(g);
  std::vector<Word> cols;
  t_labeler.minimal_form(n, w, rows.data(), cols);

  CanonicalForm cf;
  cf.n = n;
  std::int64_t nbits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  cf.bits.assign(static_cast<std::size_t>((nbits + 63) / 64), 0);
  std::int64_t cursor = 0;
  for (int k = 1; k < n; ++k) {
    const Word* col = cols.data() + static_cast<std::size_t>(k) * w;
    for (int i = 0; i < k; ++i, ++cursor)
      if (col_test(col, i)) col_set(cf.bits.data(), static_cast<int>(cursor));
  }
  return cf;
}

Graph from_canonical(const CanonicalForm& cf) {
  Graph g(cf.n);
  std::int64_t cursor = 0;
  for (int k = 1; k < cf.n; ++k)
    for (int i = 0; i < k; ++i, ++cursor)
      if (col_test(cf.bits.data(), static_cast<int>(cursor))) g.add_edge(i, k);
  return g;
}

const char* filter_name(Filter f) {
  switch (f) {
    case Filter::kAll: return "all";
    case Filter::kConnected: return "connected";
    case Filter::kDiameter2: return "diameter2";
    case Filter::kDiameter2Critical: return "d2critical";
    case Filter::kTtc3: return "ttc3";
    case Filter::kSuper4: return "super4";
  }
  return "?";
}

std::optional<Filter> filter_from_name(std::string_view name) {
  for (Filter f : {Filter::kAll, Filter::kConnected, Filter::kDiameter2,
                   Filter::kDiameter2Critical, Filter::kTtc3, Filter::kSuper4})
    if (name == filter_name(f)) return f;
  return std::nullopt;
}

bool passes_filter(const Graph& g, Filter f) {
  switch (f) {
    case Filter::kAll: return true;
    case Filter::kConnected: return is_connected(g);
    case Filter::kDiameter2: return diameter(g) == 2;
    case Filter::kDiameter2Critical: return is_diameter_k_critical(g, 2);
    case Filter::kTtc3: return is_connected(g) && is_kt_critical(g, 3);
    case Filter::kSuper4: return is_kt_supercritical(g, 4);
  }
  return false;
}

std::uint64_t generate(const EnumerationTask& task, const GraphSink& sink) {
  int n = task.n;
  if (n < 1) throw std::invalid_argument("generate: order must be at least 1");
  if (n > 64) throw std::invalid_argument("generate: orders above 64 are unsupported");
  if (n > 10 && !task.override_guard)
    throw std::invalid_argument(
        "generate: exhaustive enumeration above n=10 requires the override flag");

  int split_level = -1;
  std::uint64_t lo = 0, hi = 0;
  if (task.partition) {
    if (task.partition->level < 1 || task.partition->level >= n)
      throw std::invalid_argument("generate: partition level must be in [1, n)");
    split_level = task.partition->level;
    lo = task.partition->lo;
    hi = task.partition->hi;
  }

  // Rows of the growing graph; n <= 64 so one word per row.
  std::vector<Word> rows(n, 0);
  std::uint64_t emitted = 0;
  std::uint64_t root_index = 0;

  auto emit = [&](int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u) {
      Word r = rows[u];
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        if (u < v) g.add_edge(u, v);
      }
    }
    if (passes_filter(g, task.filter)) {
      if (sink) sink(g);
      ++emitted;
    }
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k == split_level) {
      std::uint64_t idx = root_index++;
      if (idx < lo || idx >= hi) return;
    }
    if (k == n) {
      emit(k);
      return;
    }
    for (Word mask = 0; mask < (Word{1} << k); ++mask) {
      rows[k] = mask;
      Word bit_k = Word{1} << k;
      Word r = mask;
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        rows[v] |= bit_k;
      }
      if (t_labeler.is_minimal(k + 1, 1, rows.data())) self(self, k + 1);
      r = mask;
      while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        rows[v] &= ~bit_k;
      }
      rows[k] = 0;
    }
  };

  rec(rec, 1);
  return emitted;
}

std::uint64_t count_at_order(int order) {
  EnumerationTask t;
  t.n = order;
  return generate(t, nullptr);
}

}  // namespace d2c
