#include "d2c/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "d2c/criticality.hpp"

namespace d2c {

namespace {

// Root of fn in [lo, hi] by bisection; fn must change sign.
template <typename Fn>
double bisect(Fn fn, double lo, double hi) {
  double flo = fn(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    double fm = fn(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Constants compute_constants() {
  Constants k;
  const double s2 = std::sqrt(2.0);
  k.c = 2.0 + 2.0 * s2;
  k.a = (s2 - std::sqrt(2.0 - s2)) / 2.0;
  k.threshold = 0.6756;
  k.residual_c = std::fabs(k.c * k.c - 4.0 * k.c - 4.0);
  k.residual_a = std::fabs((2.0 * k.c + 4.0) * k.a * k.a - 4.0 * k.c * k.a + k.c);

  double root_c = bisect([](double x) { return x * x - 4.0 * x - 4.0; }, 4.0, 6.0);
  double c = k.c;
  double root_a =
      bisect([c](double x) { return (2.0 * c + 4.0) * x * x - 4.0 * c * x + c; }, 0.0, 0.4);
  k.closed_form_gap = std::max(std::fabs(k.c - root_c), std::fabs(k.a - root_a));
  if (k.residual_c > 1e-12 || k.residual_a > 1e-12 || k.closed_form_gap > 1e-12)
    throw std::logic_error("constants: closed forms disagree with root-finding");
  return k;
}

long long ceil_quarter(long long x) { return (x + 3) / 4; }

void require_ttc3(const Graph& g, const char* who) {
  if (!is_kt_critical(g, 3))
    throw std::invalid_argument(std::string(who) + ": graph is not 3_t-critical");
}

void require_d2c(const Graph& g, const char* who) {
  if (!is_diameter_k_critical(g, 2))
    throw std::invalid_argument(std::string(who) + ": graph is not diameter-2-critical");
}

}  // namespace

const Constants& constants() {
  static const Constants k = compute_constants();
  return k;
}

double eval_f_A1(double y, long long n) {
  if (n < 3) throw std::invalid_argument("eval_f_A1: n must be at least 3");
  const double c = constants().c;
  double nn = static_cast<double>(n);
  return y + (y * y - 2.0 * y) / c + (nn - 1.0 - y) * (nn - 2.0 - y) / 2.0;
}

double eval_g_A1(long long n) {
  double y = constants().a * static_cast<double>(n) - 1.0;
  return eval_f_A1(y, n) - (static_cast<double>(n) * (static_cast<double>(n) - 2.0) + 1.0) / 4.0;
}

double eval_f_A2(long long n) {
  if (n < 2) throw std::invalid_argument("eval_f_A2: n must be at least 2");
  const double c = constants().c;
  double nn = static_cast<double>(n);
  double t = (2.0 * nn - 4.0) / c;
  double long_form =
      (t * t - 2.0 * t) / c + (nn - t - 1.0) * (nn - t - 2.0) / 2.0 + t - (nn * nn - 2.0 * nn) / c;
  double closed = (3.0 * std::sqrt(2.0) - 4.0) * (nn - 2.0) / 2.0;
  // The long form cancels terms of size ~n^2/c, so the agreement guard
  // scales with n^2 ulps; it stays at 1e-9 through n = 100.
  double tol = std::max(1e-9, nn * nn * 1e-13);
  if (std::fabs(long_form - closed) > tol)
    throw std::logic_error("eval_f_A2: long form and closed form disagree");
  return long_form;
}

MurtySimonResult murty_simon_status(const Graph& g) {
  long long n = g.order();
  MurtySimonResult r;
  r.m = g.size();
  r.bound = n * n / 4;
  if (r.m > r.bound) {
    r.status = MurtySimonStatus::kViolation;
  } else if (r.m == r.bound) {
    r.status = is_balanced_complete_bipartite(g) ? MurtySimonStatus::kEqualityBalancedBipartite
                                                 : MurtySimonStatus::kViolation;
  } else {
    r.status = MurtySimonStatus::kStrict;
  }
  return r;
}

MurtySimonResult check_murty_simon(const Graph& g) {
  require_d2c(g, "check_murty_simon");
  return murty_simon_status(g);
}

BoundVerdict theorem35_verdict(const Graph& g) {
  auto [mindeg, maxdeg] = degree_extremes(g);
  (void)maxdeg;
  long long n = g.order(), m = g.size();
  BoundVerdict v;
  v.applicable = n >= 3 && mindeg <= constants().a * static_cast<double>(n) - 1.0;
  long long need = ceil_quarter(n * (n - 2));
  v.holds = !v.applicable || m > need;
  v.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " delta=" + std::to_string(mindeg) + " need_gt=" + std::to_string(need);
  return v;
}

BoundVerdict check_theorem35(const Graph& g) {
  require_ttc3(g, "check_theorem35");
  return theorem35_verdict(g);
}

double theorem35_intermediate_rhs(int n, int delta) {
  const double c = constants().c;
  double d = delta;
  double b = n - 1 - delta;
  return d + (d * d - 2.0 * d) / c + b * (b - 1.0) / 2.0;
}

bool theorem35_intermediate_holds(const Graph& g) {
  auto [mindeg, maxdeg] = degree_extremes(g);
  (void)maxdeg;
  return g.size() + 1e-9 >= theorem35_intermediate_rhs(g.order(), mindeg);
}

BoundVerdict theorem36_verdict(const Graph& g, double threshold) {
  auto [mindeg, maxdeg] = degree_extremes(g);
  (void)mindeg;
  long long n = g.order(), m = g.size();
  BoundVerdict v;
  v.applicable = maxdeg >= threshold * static_cast<double>(n) - 1e-9;
  long long bound = n * n / 4;
  v.holds = !v.applicable || m < bound;
  v.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " Delta=" + std::to_string(maxdeg) + " need_lt=" + std::to_string(bound);
  return v;
}

BoundVerdict check_theorem36(const Graph& g, double threshold) {
  require_d2c(g, "check_theorem36");
  return theorem36_verdict(g, threshold);
}

bool is_balanced_complete_bipartite(const Graph& g) {
  int n = g.order();
  if (n < 2) return false;
  auto comps = components(complement(g));
  if (comps.size() != 2) return false;
  int a = comps[0].count(), b = comps[1].count();
  if (std::max(a, b) != (n + 1) / 2) return false;
  Graph h = complement(g);
  for (const auto& c : comps) {
    int sz = c.count();
    if (edge_count_within(h, c) != sz * (sz - 1) / 2) return false;
  }
  return true;
}

}  // namespace d2c
