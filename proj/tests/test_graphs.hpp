#ifndef D2C_TESTS_TEST_GRAPHS_HPP
#define D2C_TESTS_TEST_GRAPHS_HPP

#include "d2c/graph.hpp"

namespace d2c::testing {

inline Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(int n) {
  Graph g = make_path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Center 0, leaves 1..n-1.
inline Graph make_star(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// K_a u K_b on disjoint vertex ranges.
inline Graph make_two_cliques(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
  for (int u = a; u < a + b; ++u)
    for (int v = u + 1; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph make_2k2() { return make_two_cliques(2, 2); }

}  // namespace d2c::testing

#endif
