#include "d2c/criticality.hpp"

#include <stdexcept>

#include "d2c/domination.hpp"

namespace d2c {

bool is_diameter_k_critical(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("is_diameter_k_critical: k must be positive");
  if (g.order() == 0) throw std::invalid_argument("is_diameter_k_critical: empty graph");
  if (diameter(g) != k) return false;
  for (auto [u, v] : g.edges()) {
    Graph h = g.minus_edge(u, v);
    if (!diameter_exceeds(h, k)) return false;
  }
  return true;
}

bool is_kt_critical(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("is_kt_critical: k must be positive");
  if (g.order() == 0) throw std::invalid_argument("is_kt_critical: empty graph");
  if (total_domination_value(g, k) != k) return false;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (total_domination_value(g.plus_edge(u, v), k - 1) > k - 1) return false;
    }
  return true;
}

bool is_kt_supercritical(const Graph& g, int k) {
  if (k <= 0) throw std::invalid_argument("is_kt_supercritical: k must be positive");
  if (g.order() == 0) throw std::invalid_argument("is_kt_supercritical: empty graph");
  if (total_domination_value(g, k) != k) return false;
  int n = g.order();
  bool any_pair = false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      any_pair = true;
      if (total_domination_value(g.plus_edge(u, v), k - 1) != k - 2) return false;
    }
  return any_pair;
}

bool is_union_two_complete(const Graph& g) {
  if (g.order() < 2) return false;
  auto comps = components(g);
  if (comps.size() != 2) return false;
  for (const auto& c : comps) {
    int sz = c.count();
    if (sz < 2) return false;
    if (edge_count_within(g, c) != sz * (sz - 1) / 2) return false;
  }
  return true;
}

ComplementClass classify_complement(const Graph& g) {
  if (!is_diameter_k_critical(g, 2))
    throw std::invalid_argument("classify_complement: graph is not diameter-2-critical");
  Graph h = complement(g);
  if (is_kt_critical(h, 3)) return ComplementClass::kDual3tCritical;
  if (is_kt_supercritical(h, 4)) return ComplementClass::kDual4tSupercritical;
  return ComplementClass::kViolation;
}

}  // namespace d2c
