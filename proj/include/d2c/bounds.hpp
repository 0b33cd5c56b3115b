#ifndef D2C_BOUNDS_HPP
#define D2C_BOUNDS_HPP

#include <cstdint>
#include <string>

#include "d2c/graph.hpp"

namespace d2c {

/// Numeric constants shared by the bound checks. c is the greatest root
/// of x^2-4x-4 (= 2+2*sqrt(2)); a is the smallest root of
/// (2c+4)x^2-4cx+c, equal to (sqrt(2)-sqrt(2-sqrt(2)))/2; threshold is
/// the 0.6756 max-degree coefficient.
struct Constants {
  double c = 0;
  double a = 0;
  double threshold = 0.6756;
  double residual_c = 0;       // |c^2 - 4c - 4|
  double residual_a = 0;       // |(2c+4)a^2 - 4ca + c|
  double closed_form_gap = 0;  // |a - bisection root of its polynomial|
};

/// Closed forms cross-checked against bisection root-finding at first use.
const Constants& constants();

/// f(y) = y + (y^2-2y)/c + (n-1-y)(n-2-y)/2, the binomial term extended
/// polynomially.
double eval_f_A1(double y, long long n);

/// g(n) = f(a*n - 1) - (n(n-2)+1)/4, evaluated from the definition.
double eval_g_A1(long long n);

/// The difference whose positivity closes the counting induction,
/// evaluated from its long defining form with t = (2n-4)/c. Throws
/// std::logic_error when the long form and the closed form
/// (3*sqrt(2)-4)(n-2)/2 disagree beyond 1e-9.
double eval_f_A2(long long n);

enum class MurtySimonStatus { kStrict, kEqualityBalancedBipartite, kViolation };

struct MurtySimonResult {
  long long m = 0;
  long long bound = 0;  // floor(n^2/4)
  MurtySimonStatus status = MurtySimonStatus::kStrict;
};

/// Edge-count bound for diameter-2-critical graphs; equality demands the
/// balanced complete bipartite graph. check_murty_simon verifies the
/// precondition and throws when g is not diameter-2-critical;
/// murty_simon_status trusts the caller.
MurtySimonResult check_murty_simon(const Graph& g);
MurtySimonResult murty_simon_status(const Graph& g);

struct BoundVerdict {
  bool applicable = false;
  bool holds = true;  // vacuously true when not applicable
  std::string detail;
};

/// Minimum-degree bound: applicable when n >= 3 and delta <= a*n-1; then
/// m must exceed ceil(n(n-2)/4). check_theorem35 verifies 3_t-criticality.
BoundVerdict check_theorem35(const Graph& g);
BoundVerdict theorem35_verdict(const Graph& g);

/// Edge-count lower bound from the proof chain, valid for every
/// 3_t-critical graph: m >= delta + (delta^2-2delta)/c + C(n-1-delta, 2).
double theorem35_intermediate_rhs(int n, int delta);
bool theorem35_intermediate_holds(const Graph& g);

/// Max-degree bound: applicable when Delta >= threshold*n; then
/// m < floor(n^2/4). check_theorem36 verifies diameter-2-criticality.
BoundVerdict check_theorem36(const Graph& g, double threshold = constants().threshold);
BoundVerdict theorem36_verdict(const Graph& g, double threshold = constants().threshold);

/// True iff g is the complete bipartite graph with sides ceil(n/2) and
/// floor(n/2) (a side of one vertex is allowed).
bool is_balanced_complete_bipartite(const Graph& g);

}  // namespace d2c

#endif
