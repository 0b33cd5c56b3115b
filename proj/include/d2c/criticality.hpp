#ifndef D2C_CRITICALITY_HPP
#define D2C_CRITICALITY_HPP

#include "d2c/graph.hpp"

namespace d2c {

/// diam(g) == k and deleting any edge pushes the diameter above k.
/// Deletions that disconnect count as an increase (infinite diameter).
bool is_diameter_k_critical(const Graph& g, int k);

/// gamma_t(g) == k (finite) and adding any missing edge drops gamma_t
/// below k. Complete graphs with gamma_t == k qualify vacuously.
bool is_kt_critical(const Graph& g, int k);

/// k_t-critical and every missing-edge addition drops gamma_t to exactly
/// k-2. Complete graphs never qualify: there is no pair to witness the
/// drop.
bool is_kt_supercritical(const Graph& g, int k);

/// Exactly two connected components, each a complete graph on >= 2
/// vertices.
bool is_union_two_complete(const Graph& g);

enum class ComplementClass { kDual3tCritical, kDual4tSupercritical, kViolation };

/// Classifies the complement of a diameter-2-critical graph by the two
/// criticality predicates. Throws std::invalid_argument when g is not
/// diameter-2-critical. kViolation marks a complement that is neither
/// 3_t-critical nor 4_t-supercritical; the only such inputs are the stars
/// K_{1,n-1}, whose complements contain an isolated vertex.
ComplementClass classify_complement(const Graph& g);

}  // namespace d2c

#endif
