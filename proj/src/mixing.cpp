#include "mixkit/mixing.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mixkit/laplacian.hpp"

namespace mixkit {

namespace {

double column_distance(const Eigen::VectorXd& col, const Eigen::VectorXd& pi, double p) {
  if (p == kInfinityP) return ((col - pi).cwiseAbs().cwiseQuotient(pi)).maxCoeff();
  if (p == 1.0) return (col - pi).cwiseAbs().sum();
  if (p == 2.0) return std::sqrt(((col - pi).array().square() / pi.array()).sum());
  return std::pow((pi.array() * ((col - pi).cwiseAbs().cwiseQuotient(pi)).array().pow(p)).sum(),
                  1.0 / p);
}

struct RowSampler {
  std::vector<long> offset;
  std::vector<double> cdf;
  std::vector<Index> col;

  explicit RowSampler(const SparseRowMatrix& P) {
    const Eigen::Index n = P.rows();
    offset.assign(n + 1, 0);
    for (Eigen::Index v = 0; v < n; ++v) {
      double acc = 0.0;
      for (SparseRowMatrix::InnerIterator it(P, v); it; ++it) {
        acc += it.value();
        cdf.push_back(acc);
        col.push_back(static_cast<Index>(it.col()));
      }
      offset[v + 1] = static_cast<long>(cdf.size());
    }
  }

  Index step(Index v, double u) const {
    const long b = offset[v], e = offset[v + 1];
    const double target = u * cdf[e - 1];
    long lo = b, hi = e - 1;
    while (lo < hi) {
      long mid = (lo + hi) / 2;
      if (cdf[mid] <= target)
        lo = mid + 1;
      else
        hi = mid;
    }
    return col[lo];
  }
};

}  // namespace

MixingCurve mixing_curve(const TransitionKernel& k, double p, double eps,
                         const MixingOptions& opts) {
  if (eps <= 0.0) throw std::invalid_argument("mixing_curve: eps must be positive");
  const Eigen::Index n = k.size();
  std::vector<Index> starts = opts.starts;
  if (starts.empty()) {
    if (n > 5000)
      throw std::invalid_argument("mixing_curve: explicit start list required for N > 5000");
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0);
  }
  MixingCurve curve;
  curve.p = p;
  curve.eps = eps;
  curve.starts = starts;
  long tau = 0;
  const int chunk = std::max(1, opts.chunk);
  for (std::size_t base = 0; base < starts.size(); base += chunk) {
    const int width = static_cast<int>(std::min<std::size_t>(chunk, starts.size() - base));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, width);
    for (int j = 0; j < width; ++j) m(starts[base + j], j) = 1.0;
    long t = 0;
    for (;; ++t) {
      double worst = 0.0;
      for (int j = 0; j < width; ++j)
        worst = std::max(worst, column_distance(m.col(j), k.pi, p));
      if (static_cast<long>(curve.dist.size()) <= t)
        curve.dist.push_back(worst);
      else
        curve.dist[t] = std::max(curve.dist[t], worst);
      if (worst <= eps) break;
      if (t >= opts.t_cap)
        throw std::runtime_error("mixing_curve: t-cap exceeded at t=" + std::to_string(t));
      m = (k.P.transpose() * m).eval();
    }
    tau = std::max(tau, t);
  }
  curve.tau = tau;
  return curve;
}

long mixing_time(const TransitionKernel& k, double p, double eps, const MixingOptions& opts) {
  return mixing_curve(k, p, eps, opts).tau;
}

long mixing_time(const WeightedGraph& g, double p, double eps, const MixingOptions& opts) {
  return mixing_time(lazy_kernel(g), p, eps, opts);
}

HittingSolveResult hit_probability(const WeightedGraph& g, const VertexSet& a,
                                   const VertexSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hit_probability: empty target set");
  for (Index v : a.indices())
    if (b.contains(v)) throw std::invalid_argument("hit_probability: sets must be disjoint");
  std::vector<Index> bd = a.indices();
  bd.insert(bd.end(), b.indices().begin(), b.indices().end());
  VertexSet boundary(bd, g.num_vertices());
  HittingSolveResult r;
  r.method = "linear-solve";
  r.value = Eigen::VectorXd::Zero(g.num_vertices());
  for (Index v : a.indices()) r.value[v] = 1.0;
  if (boundary.size() == static_cast<std::size_t>(g.num_vertices())) return r;
  GroundedLaplacian solver(g, boundary);
  const auto& interior = solver.interior();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i)
    for (const auto& nb : g.neighbors(interior[i]))
      if (a.contains(nb.to)) rhs[i] += nb.c;
  Eigen::VectorXd h = solver.solve(rhs);
  for (std::size_t i = 0; i < interior.size(); ++i) r.value[interior[i]] = h[i];
  return r;
}

HittingSolveResult expected_hitting_time(const WeightedGraph& g, const VertexSet& d) {
  if (d.empty()) throw std::invalid_argument("expected_hitting_time: empty target set");
  HittingSolveResult r;
  r.method = "linear-solve";
  r.value = Eigen::VectorXd::Zero(g.num_vertices());
  if (d.size() == static_cast<std::size_t>(g.num_vertices())) return r;
  GroundedLaplacian solver(g, d);
  const auto& interior = solver.interior();
  // (I - P_U) k = 1  <=>  L_UU k = 2 c_U (loops included in c).
  Eigen::VectorXd rhs(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) rhs[i] = 2.0 * g.strength(interior[i]);
  Eigen::VectorXd t = solver.solve(rhs);
  for (std::size_t i = 0; i < interior.size(); ++i) r.value[interior[i]] = t[i];
  return r;
}

std::vector<ExitTail> exit_tail_curve(const WeightedGraph& g, const VertexSet& a, Index start,
                                      long t_max) {
  if (!a.contains(start)) throw std::invalid_argument("exit_tail: start must lie in the set");
  TransitionKernel k = lazy_kernel(g);
  RestrictedKernel r = restrict_kernel(k, a);
  const double gap = restricted_gap(k, a);
  const auto& idx = a.indices();
  Eigen::Index start_pos = -1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] == start) start_pos = static_cast<Eigen::Index>(i);
  double ratio = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    ratio = std::max(ratio, std::sqrt(k.pi[idx[i]] / k.pi[start]));
  const double prefactor = static_cast<double>(a.size()) * ratio;
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(idx.size());
  mass[start_pos] = 1.0;
  std::vector<ExitTail> out;
  out.reserve(t_max + 1);
  for (long t = 0; t <= t_max; ++t) {
    if (t > 0) mass = r.P.transpose() * mass;
    out.push_back({mass.sum(), prefactor * std::exp(-gap * t), gap});
  }
  return out;
}

ExitTail exit_tail(const WeightedGraph& g, const VertexSet& a, Index start, long t) {
  return exit_tail_curve(g, a, start, t).back();
}

DecompositionReport conditional_decomposition_check(const WeightedGraph& g, Index x, long t,
                                                    const VertexSet& s, double ell) {
  if (!(ell > 1.0 && ell <= 2.0))
    throw std::invalid_argument("conditional_decomposition_check: ell must lie in (1,2]");
  TransitionKernel k = lazy_kernel(g);
  const Eigen::Index n = k.size();
  Eigen::VectorXd full = evolve(k.P, Eigen::VectorXd::Unit(n, x), t);

  // Survival law: evolve through the substochastic restriction to V \ S and
  // embed back; total remaining mass is Pr[T_S > t].
  VertexSet u = s.complement(g.num_vertices());
  Eigen::VectorXd survived = Eigen::VectorXd::Zero(n);
  if (u.contains(x)) {
    RestrictedKernel r = restrict_kernel(k, u);
    const auto& idx = u.indices();
    Eigen::VectorXd m = Eigen::VectorXd::Zero(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (idx[i] == x) m[i] = 1.0;
    for (long step = 0; step < t; ++step) m = r.P.transpose() * m;
    for (std::size_t i = 0; i < idx.size(); ++i) survived[idx[i]] = m[i];
  }
  const double pr_a = survived.sum();
  DecompositionReport rep;
  rep.prob_event = pr_a;
  rep.lhs = lp_distance(full, k.pi, k.pi, ell);
  if (pr_a <= 0.0) {
    rep.rhs = rep.lhs;
  } else if (pr_a >= 1.0) {
    rep.rhs = lp_distance((survived / pr_a).eval(), k.pi, k.pi, ell);
  } else {
    Eigen::VectorXd cond_a = survived / pr_a;
    Eigen::VectorXd cond_ac = (full - survived) / (1.0 - pr_a);
    rep.rhs = pr_a * lp_distance(cond_a, k.pi, k.pi, ell) +
              (1.0 - pr_a) * lp_distance(cond_ac, k.pi, k.pi, ell);
  }
  return rep;
}

PoincareReport poincare_check(const WeightedGraph& g, const Distribution& mu, long t_max,
                              double tol) {
  TransitionKernel k = lazy_kernel(g);
  const double gap = spectral_gap(k);
  const double base = lp_distance(mu.vec(), k.pi, k.pi, 2.0);
  Eigen::VectorXd m = mu.vec();
  PoincareReport rep;
  for (long t = 0; t <= t_max; ++t) {
    if (t > 0) m = k.P.transpose() * m;
    const double lhs = lp_distance(m, k.pi, k.pi, 2.0);
    const double rhs = std::exp(-gap * t) * base;
    rep.max_violation = std::max(rep.max_violation, lhs - rhs);
    ++rep.checked;
  }
  rep.ok = rep.max_violation <= tol;
  return rep;
}

L2LinftyReport l2_linfty_relation_check(const WeightedGraph& g, double a, long t_max) {
  TransitionKernel k = lazy_kernel(g);
  const Eigen::Index n = k.size();
  Eigen::MatrixXd p = Eigen::MatrixXd(k.P);
  Eigen::MatrixXd pt = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> worst2, worstinf;
  const long hard_cap = 200000;
  L2LinftyReport rep;
  long horizon = 2 * t_max;
  for (long t = 0;; ++t) {
    double w2 = 0.0, wi = 0.0;
    for (Eigen::Index x = 0; x < n; ++x) {
      w2 = std::max(w2, column_distance(pt.row(x).transpose(), k.pi, 2.0));
      wi = std::max(wi, column_distance(pt.row(x).transpose(), k.pi, kInfinityP));
    }
    worst2.push_back(w2);
    worstinf.push_back(wi);
    if (rep.tau_inf < 0 && wi <= a) rep.tau_inf = t;
    if (rep.tau_2 < 0 && w2 <= std::sqrt(a)) rep.tau_2 = t;
    if (t >= horizon) {
      if (rep.tau_inf >= 0 && rep.tau_2 >= 0) break;
      horizon *= 2;
      if (horizon > hard_cap)
        throw std::runtime_error("l2_linfty_relation_check: mixing horizon exceeded");
    }
    pt = pt * p;
  }
  for (long t = 0; t <= t_max; ++t)
    rep.max_identity_gap =
        std::max(rep.max_identity_gap, std::abs(worstinf[2 * t] - worst2[t] * worst2[t]));
  rep.ok = rep.max_identity_gap <= 1e-9 && std::labs(rep.tau_inf - 2 * rep.tau_2) <= 1;
  return rep;
}

WalkSummary simulate_walk(const TransitionKernel& k, Index x, long horizon,
                          unsigned long long seed, const std::vector<VertexSet>& recorders) {
  WalkSummary s;
  s.first_hit.assign(recorders.size(), -1);
  if (horizon <= 0) return s;
  RowSampler sampler(k.P);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Index v = x;
  for (std::size_t rset = 0; rset < recorders.size(); ++rset)
    if (recorders[rset].contains(v)) s.first_hit[rset] = 0;
  for (long t = 1; t <= horizon; ++t) {
    v = sampler.step(v, unif(rng));
    ++s.steps;
    for (std::size_t rset = 0; rset < recorders.size(); ++rset)
      if (s.first_hit[rset] < 0 && recorders[rset].contains(v)) s.first_hit[rset] = t;
  }
  s.end_vertex = v;
  return s;
}

BatchHitEstimate estimate_hit_probability(const TransitionKernel& k, Index x, const VertexSet& a,
                                          const VertexSet& b, long runs,
                                          unsigned long long seed) {
  RowSampler sampler(k.P);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  BatchHitEstimate est;
  est.runs = runs;
  const long step_cap = 100000000;
  for (long r = 0; r < runs; ++r) {
    Index v = x;
    long t = 0;
    while (!a.contains(v) && !b.contains(v)) {
      v = sampler.step(v, unif(rng));
      if (++t > step_cap) throw std::runtime_error("estimate_hit_probability: walk did not absorb");
    }
    if (a.contains(v)) ++est.hits;
  }
  est.p_hat = static_cast<double>(est.hits) / static_cast<double>(runs);
  const double z = 1.959963984540054;
  const double nf = static_cast<double>(runs);
  const double denom = 1.0 + z * z / nf;
  const double center = (est.p_hat + z * z / (2.0 * nf)) / denom;
  const double half =
      z * std::sqrt(est.p_hat * (1.0 - est.p_hat) / nf + z * z / (4.0 * nf * nf)) / denom;
  est.wilson_lo = std::max(0.0, center - half);
  est.wilson_hi = std::min(1.0, center + half);
  return est;
}

}  // namespace mixkit
