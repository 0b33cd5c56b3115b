#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "d2c/bounds.hpp"
#include "d2c/criticality.hpp"
#include "test_graphs.hpp"

using namespace d2c;
using namespace d2c::testing;

TEST_SUITE("bounds") {

TEST_CASE("constants") {
  const Constants& k = constants();
  CHECK(k.c == doctest::Approx(4.82842712474619).epsilon(1e-12));
  CHECK(k.a == doctest::Approx(0.32442334).epsilon(1e-7));
  CHECK(k.residual_c < 1e-12);
  CHECK(k.residual_a < 1e-12);
  CHECK(k.closed_form_gap < 1e-12);
  CHECK(std::fabs(k.a - (std::sqrt(2.0) - std::sqrt(2.0 - std::sqrt(2.0))) / 2.0) < 1e-12);
  CHECK(k.a + k.threshold >= 1.0 - 1e-4);
}

TEST_CASE("eval_f_A1") {
  for (long long n : {3LL, 5LL, 17LL})
    CHECK(eval_f_A1(0.0, n) == doctest::Approx((n - 1.0) * (n - 2.0) / 2.0));
  CHECK(eval_f_A1(constants().a * 3 - 1, 3) == doctest::Approx(1.025).epsilon(1e-3));
  CHECK_THROWS_AS(eval_f_A1(0.0, 2), std::invalid_argument);
}

TEST_CASE("eval_g_A1") {
  CHECK(eval_g_A1(3) == doctest::Approx(0.025).epsilon(0.2));
  CHECK(eval_g_A1(3) > 0.020);
  CHECK(eval_g_A1(3) < 0.030);
  for (long long n = 3; n <= 200; ++n) CHECK(eval_g_A1(n) > 0.0);
  for (long long n = 4; n <= 200; ++n) CHECK(eval_g_A1(n) > eval_g_A1(n - 1));
}

TEST_CASE("eval_f_A2") {
  CHECK(eval_f_A2(2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_f_A2(3) == doctest::Approx((3.0 * std::sqrt(2.0) - 4.0) / 2.0).epsilon(1e-12));
  for (long long n = 3; n <= 200; ++n) CHECK(eval_f_A2(n) > 0.0);
  CHECK_THROWS_AS(eval_f_A2(1), std::invalid_argument);
}

TEST_CASE("check_murty_simon") {
  MurtySimonResult c5 = check_murty_simon(make_cycle(5));
  CHECK(c5.m == 5);
  CHECK(c5.bound == 6);
  CHECK(c5.status == MurtySimonStatus::kStrict);

  CHECK(check_murty_simon(make_cycle(4)).status == MurtySimonStatus::kEqualityBalancedBipartite);
  CHECK(check_murty_simon(make_path(3)).status == MurtySimonStatus::kEqualityBalancedBipartite);

  MurtySimonResult star = check_murty_simon(make_star(4));
  CHECK(star.m == 3);
  CHECK(star.bound == 4);
  CHECK(star.status == MurtySimonStatus::kStrict);

  CHECK_THROWS_AS(check_murty_simon(make_complete(4)), std::invalid_argument);
}

TEST_CASE("is_balanced_complete_bipartite") {
  CHECK(is_balanced_complete_bipartite(make_path(3)));  // K_{2,1}
  CHECK(is_balanced_complete_bipartite(make_cycle(4)));  // K_{2,2}
  CHECK(is_balanced_complete_bipartite(make_complete_bipartite(3, 2)));
  CHECK(is_balanced_complete_bipartite(make_complete(2)));  // K_{1,1}
  CHECK_FALSE(is_balanced_complete_bipartite(make_star(5)));  // K_{1,4} unbalanced
  CHECK_FALSE(is_balanced_complete_bipartite(make_complete(4)));
  CHECK_FALSE(is_balanced_complete_bipartite(make_cycle(5)));
  CHECK_FALSE(is_balanced_complete_bipartite(make_cycle(6)));  // bipartite, not complete
}

TEST_CASE("check_theorem35") {
  // C5: delta = 2 > a*5-1, so the bound is vacuous.
  BoundVerdict v = check_theorem35(make_cycle(5));
  CHECK_FALSE(v.applicable);
  CHECK(v.holds);
  CHECK_THROWS_AS(check_theorem35(make_cycle(4)), std::invalid_argument);
}

TEST_CASE("theorem35 intermediate bound") {
  // C5: m = 5 >= 2 + 0 + C(2,2) = 3.
  CHECK(theorem35_intermediate_rhs(5, 2) == doctest::Approx(3.0));
  CHECK(theorem35_intermediate_holds(make_cycle(5)));
}

TEST_CASE("check_theorem36") {
  BoundVerdict star = check_theorem36(make_star(4));
  CHECK(star.applicable);  // Delta = 3 >= 2.7024
  CHECK(star.holds);       // 3 < 4

  BoundVerdict c5 = check_theorem36(make_cycle(5));
  CHECK_FALSE(c5.applicable);  // Delta = 2 < 3.378
  CHECK(c5.holds);

  // threshold is configurable
  CHECK(check_theorem36(make_cycle(5), 0.4).applicable);
  CHECK(check_theorem36(make_cycle(5), 0.4).holds);  // 5 < 6

  CHECK_THROWS_AS(check_theorem36(make_complete(4)), std::invalid_argument);
}

TEST_CASE("two-clique unions with a small side clear the quarter bound") {
  // The supercritical branch of the max-degree proof: K_a u K_{n-a} with
  // a <= 0.3244n - 1 has more than ceil(n(n-2)/4) edges.
  for (int n = 4; n <= 150; ++n) {
    for (int a = 2; 2 * a <= n; ++a) {
      if (a > 0.3244 * n - 1) continue;
      long long m = static_cast<long long>(a) * (a - 1) / 2 +
                    static_cast<long long>(n - a) * (n - a - 1) / 2;
      long long need = (static_cast<long long>(n) * (n - 2) + 3) / 4;
      CHECK(m > need);
    }
  }
}

}  // TEST_SUITE
