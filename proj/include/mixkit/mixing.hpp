#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixkit/kernel.hpp"
#include "mixkit/spectral.hpp"

namespace mixkit {

// Worst-case L_p distance from stationarity per step, over a start set.
struct MixingCurve {
  double p = 1.0;
  std::vector<double> dist;  // dist[t], t = 0..horizon; exact per-start max
  std::vector<Index> starts;
  long tau = -1;  // first t with dist <= eps, -1 if never reached
  double eps = 0.5;
};

struct MixingOptions {
  std::vector<Index> starts;  // empty: all vertices (N <= 5000)
  long t_cap = 10000000;
  int chunk = 64;
};

// Worst-start curve and tau_p(eps); forward evolution with per-step distance
// checks. Per-start curves are nonincreasing (P contracts every L_p(pi)), so
// the first threshold crossing is exact.
MixingCurve mixing_curve(const TransitionKernel& k, double p, double eps,
                         const MixingOptions& opts = {});
long mixing_time(const TransitionKernel& k, double p, double eps = 0.5,
                 const MixingOptions& opts = {});
long mixing_time(const WeightedGraph& g, double p, double eps = 0.5,
                 const MixingOptions& opts = {});

// Hitting-problem solutions on the grounded Laplacian.
struct HittingSolveResult {
  Eigen::VectorXd value;  // per vertex: probability or expected time
  std::string method;     // "linear-solve" | "monte-carlo"
  long samples = 0;
  unsigned long long seed = 0;
};

// h(x) = Pr_x[T_A < T_B]; h = 1 on A, 0 on B, harmonic elsewhere.
HittingSolveResult hit_probability(const WeightedGraph& g, const VertexSet& a,
                                   const VertexSet& b);

// k(x) = E_x[T_D]; solves (I - P_{V \ D}) k = 1.
HittingSolveResult expected_hitting_time(const WeightedGraph& g, const VertexSet& d);

// Pr_a[T_{complement of A} > t] exactly via restricted-kernel powers, plus
// the spectral bound |A| max_b sqrt(pi(b)/pi(a)) exp(-lambda(A) t).
struct ExitTail {
  double exact = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // lambda(A)
};
ExitTail exit_tail(const WeightedGraph& g, const VertexSet& a, Index start, long t);
// Whole trajectory t = 0..t_max with one evolution sweep.
std::vector<ExitTail> exit_tail_curve(const WeightedGraph& g, const VertexSet& a, Index start,
                                      long t_max);

// ||Pr_x^t - pi||_{l,pi} versus the survival-weighted decomposition over the
// event {T_S > t}; the decomposition dominates (triangle inequality), with
// equality when Pr[T_S > t] is 0 or 1.
struct DecompositionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double prob_event = 0.0;  // Pr_x[T_S > t]
};
DecompositionReport conditional_decomposition_check(const WeightedGraph& g, Index x, long t,
                                                    const VertexSet& s, double ell);

// ||Pr_mu^t - pi||_{2,pi} <= exp(-lambda t) ||mu - pi||_{2,pi} for t <= t_max.
struct PoincareReport {
  double max_violation = 0.0;  // max over t of lhs - rhs
  long checked = 0;
  bool ok = true;
};
PoincareReport poincare_check(const WeightedGraph& g, const Distribution& mu, long t_max,
                              double tol = 1e-12);

// max_x ||Pr_x^{2t} - pi||_{inf,pi} = (max_x ||Pr_x^t - pi||_{2,pi})^2 and
// tau_inf(a) = 2 tau_2(sqrt(a)) up to one step of even-time rounding.
struct L2LinftyReport {
  double max_identity_gap = 0.0;
  long tau_inf = -1;
  long tau_2 = -1;
  bool ok = true;
};
L2LinftyReport l2_linfty_relation_check(const WeightedGraph& g, double a, long t_max = 30);

// Seeded single trajectory; records the first hitting time of each recorder
// set (-1 when unhit by the horizon).
struct WalkSummary {
  std::vector<long> first_hit;
  Index end_vertex = -1;
  long steps = 0;
};
WalkSummary simulate_walk(const TransitionKernel& k, Index x, long horizon,
                          unsigned long long seed, const std::vector<VertexSet>& recorders);

// Batched two-set race; Wilson interval on Pr_x[T_A < T_B].
struct BatchHitEstimate {
  double p_hat = 0.0;
  double wilson_lo = 0.0, wilson_hi = 1.0;
  long hits = 0, runs = 0;
};
BatchHitEstimate estimate_hit_probability(const TransitionKernel& k, Index x, const VertexSet& a,
                                          const VertexSet& b, long runs, unsigned long long seed);

}  // namespace mixkit
