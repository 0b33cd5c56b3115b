#include <stdexcept>

#include "doctest.h"
#include "d2c/domination.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/quasi.hpp"
#include "test_graphs.hpp"

using namespace d2c;
using namespace d2c::testing;

TEST_SUITE("quasi") {

TEST_CASE("find_quasi_edges on C5") {
  Graph c5 = make_cycle(5);
  auto qes = find_quasi_edges(c5, 0, 2);
  REQUIRE(qes.size() == 2);
  CHECK(qes[0].edge() == std::pair{0, 4});
  CHECK(qes[0].pair() == std::pair{0, 2});
  CHECK(qes[0].supplement == 2);
  CHECK(qes[1].edge() == std::pair{2, 3});
  CHECK(qes[1].pair() == std::pair{0, 2});
  CHECK(qes[1].supplement == 0);

  // the rotated pair gives the rotated answer
  auto rotated = find_quasi_edges(c5, 1, 3);
  REQUIRE(rotated.size() == 2);
  CHECK(rotated[0].edge() == std::pair{0, 1});
  CHECK(rotated[0].supplement == 3);
  CHECK(rotated[1].edge() == std::pair{3, 4});
  CHECK(rotated[1].supplement == 1);
}

TEST_CASE("find_quasi_edges rejects bad pairs") {
  Graph c5 = make_cycle(5);
  CHECK_THROWS_AS(find_quasi_edges(c5, 0, 1), std::invalid_argument);  // adjacent
  CHECK_THROWS_AS(find_quasi_edges(c5, 2, 2), std::invalid_argument);  // equal
  CHECK_THROWS_AS(find_quasi_edges(c5, 0, 9), std::out_of_range);
}

TEST_CASE("quasi-edge structure invariants on every 3t-critical graph up to n=7") {
  for (int n = 5; n <= 7; ++n) {
    EnumerationTask t;
    t.n = n;
    t.filter = Filter::kTtc3;
    generate(t, [&](const Graph& g) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          VertexSet pairset = VertexSet::of(n, {u, v});
          CHECK_FALSE(totally_dominates(g, pairset, VertexSet::all(n)));
          auto qes = find_quasi_edges(g, u, v);
          // existence is guaranteed only for pairs that do not dominate G
          if (!dominates(g, pairset, VertexSet::all(n))) CHECK_FALSE(qes.empty());
          for (const QuasiEdge& qe : qes) {
            CHECK(g.adjacent(qe.anchor, qe.helper));
            CHECK((qe.supplement == u || qe.supplement == v));
            CHECK((qe.anchor == u || qe.anchor == v));
            CHECK_FALSE(g.adjacent(qe.helper, qe.supplement));
            // the supplement is the unique vertex the edge fails to dominate
            VertexSet covered = g.neighbors(qe.anchor);
            covered |= g.neighbors(qe.helper);
            covered.set(qe.anchor).set(qe.helper);
            VertexSet rest = covered.complemented();
            CHECK(rest.count() == 1);
            CHECK(rest.test(qe.supplement));
          }
        }
    });
  }
}

TEST_CASE("is_quasi_clique on C5") {
  Graph c5 = make_cycle(5);
  CHECK(is_quasi_clique(c5, VertexSet::of(5, {2, 3})));   // clique, vacuous
  CHECK_FALSE(is_quasi_clique(c5, VertexSet::all(5)));    // quasi-edges of {0,2} live inside
  CHECK(is_quasi_clique(c5, VertexSet::of(5, {0, 2})));
  CHECK(is_quasi_clique(c5, VertexSet::of(5, {})));
}

TEST_CASE("associated_edges on C5") {
  Graph c5 = make_cycle(5);
  using E = std::vector<std::pair<int, int>>;
  CHECK(associated_edges(c5, VertexSet::of(5, {2, 3})) == E{{2, 3}});
  CHECK(associated_edges(c5, VertexSet::of(5, {0, 2})) == E{{0, 4}, {2, 3}});
  CHECK(associated_edges(c5, VertexSet::of(5, {1, 4})) == E{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(associated_edges(c5, VertexSet::all(5)), std::invalid_argument);
}

TEST_CASE("quasi_edge_family on C5") {
  Graph c5 = make_cycle(5);
  auto fam = quasi_edge_family(c5, VertexSet::of(5, {1, 4}), VertexSet::of(5, {2, 3}));
  using E = std::vector<std::pair<int, int>>;
  CHECK(fam.edges() == E{{1, 2}, {3, 4}});
  CHECK(fam.edge_count() == 2);

  // both members carry the same nonadjacent pair {1,4} from opposite sides
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].pair() == std::pair{1, 4});
  CHECK(fam.members[1].pair() == std::pair{1, 4});
  CHECK(fam.members[0].anchor != fam.members[1].anchor);
  CHECK(fam.distinct_pair_count() == 1);

  CHECK(quasi_edge_family(c5, VertexSet::of(5, {2, 3}), VertexSet::of(5, {0, 1})).edge_count() ==
        0);
  CHECK_THROWS_AS(quasi_edge_family(c5, VertexSet::of(5, {1, 4}), VertexSet::of(5, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("common_neighborhood") {
  Graph c5 = make_cycle(5);
  CHECK(common_neighborhood(c5, VertexSet::of(5, {0})) == VertexSet::of(5, {1, 4}));
  CHECK(common_neighborhood(c5, VertexSet::of(5, {0, 1})) == VertexSet(5));
  CHECK(common_neighborhood(make_complete(4), VertexSet::of(4, {0, 1})) ==
        VertexSet::of(4, {2, 3}));
  CHECK_THROWS_AS(common_neighborhood(c5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("check_lemma33 on C5") {
  Graph c5 = make_cycle(5);
  Lemma33Result r = check_lemma33(c5, VertexSet::of(5, {0}));
  CHECK(r.star_size == 2);
  CHECK(r.induced_edges == 0);
  CHECK(r.family_edges == 2);
  CHECK(r.lhs() == 2);
  CHECK(r.rhs == doctest::Approx(0.0));
  CHECK(r.holds);

  Lemma33Result empty_star = check_lemma33(c5, VertexSet::of(5, {0, 1}));
  CHECK(empty_star.star_size == 0);
  CHECK(empty_star.lhs() == 0);
  CHECK(empty_star.holds);

  CHECK_THROWS_AS(check_lemma33(make_cycle(4), VertexSet::of(4, {0})), std::invalid_argument);
}

TEST_CASE("small common neighborhoods make the inequality vacuous") {
  // |S*| <= 2 forces rhs <= 0 <= lhs.
  for (int n = 5; n <= 6; ++n) {
    EnumerationTask t;
    t.n = n;
    t.filter = Filter::kTtc3;
    generate(t, [&](const Graph& g) {
      for (int u = 0; u < n; ++u) {
        Lemma33Result r = lemma33_counts(g, VertexSet::of(n, {u}));
        if (r.star_size <= 2) {
          CHECK(r.rhs <= 0.0);
          CHECK(r.holds);
        }
      }
    });
  }
}

TEST_CASE("check_lemma34 on C5 and precondition") {
  Graph c5 = make_cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(check_lemma34(c5, v));
  CHECK_THROWS_AS(check_lemma34(c5, 7), std::out_of_range);
  // complement of C4 is 2K2, not 3_t-critical
  CHECK_THROWS_AS(check_lemma34(complement(make_cycle(4)), 0), std::invalid_argument);
}

}  // TEST_SUITE
