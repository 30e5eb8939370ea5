#include "mixkit/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace mixkit {

namespace {

// Largest non-Perron eigenpair of the pi-symmetrized kernel by deflated
// power iteration. The lazy spectrum lies in [0,1], so after deflating the
// Perron direction sqrt(pi) the iteration converges to beta_2 = 1 - lambda.
std::pair<double, Eigen::VectorXd> second_eigenpair_iterative(const SparseRowMatrix& P,
                                                              const Eigen::VectorXd& pi,
                                                              double tol = 1e-9,
                                                              long max_iter = 1000000) {
  const Eigen::Index n = P.rows();
  Eigen::VectorXd sq = pi.cwiseSqrt();  // unit vector: sum pi = 1
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = std::cos(0.7 * static_cast<double>(i) + 0.3);
  x -= sq.dot(x) * sq;
  x.normalize();
  double beta = 0.0;
  for (long it = 1; it <= max_iter; ++it) {
    // S x = sqrtpi .* (P (x ./ sqrtpi))
    Eigen::VectorXd y = P * x.cwiseQuotient(sq).eval();
    y = y.cwiseProduct(sq);
    y -= sq.dot(y) * sq;
    double norm = y.norm();
    if (norm == 0.0) return {0.0, Eigen::VectorXd::Zero(n)};
    y /= norm;
    double beta_new = y.dot((P * y.cwiseQuotient(sq).eval()).cwiseProduct(sq));
    if (it > 4 && std::abs(beta_new - beta) <= tol * std::max(1.0, std::abs(beta_new))) {
      return {beta_new, y};
    }
    beta = beta_new;
    x = y;
  }
  throw std::runtime_error("spectral_gap: power iteration failed to converge after " +
                           std::to_string(max_iter) + " iterations");
}

struct SubsetScan {
  // Q(A) contributions: crossing edge {x,y} adds c_xy / (2 c_V).
  std::vector<std::vector<std::pair<int, double>>> adj;  // (neighbor, c/(2 c_V))
  Eigen::VectorXd pi;
};

SubsetScan make_scan(const WeightedGraph& g) {
  SubsetScan s;
  s.pi = stationary(g).vec();
  s.adj.assign(g.num_vertices(), {});
  const double cv = g.total_strength();
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    s.adj[e.u].push_back({e.v, e.c / (2.0 * cv)});
    s.adj[e.v].push_back({e.u, e.c / (2.0 * cv)});
  }
  return s;
}

double exact_cut(const SubsetScan& s, std::uint32_t mask) {
  KahanSum q;
  for (int x = 0; x < static_cast<int>(s.adj.size()); ++x) {
    if (!(mask >> x & 1u)) continue;
    for (auto [y, w] : s.adj[x])
      if (!(mask >> y & 1u)) q.add(w);
  }
  return q.value();
}

double exact_mass(const SubsetScan& s, std::uint32_t mask) {
  KahanSum m;
  for (int x = 0; x < static_cast<int>(s.adj.size()); ++x)
    if (mask >> x & 1u) m.add(s.pi[x]);
  return m.value();
}

bool mask_connected(const std::vector<std::uint32_t>& adj_mask, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t reached = mask & (~mask + 1u);  // lowest set bit
  for (;;) {
    std::uint32_t frontier = reached;
    std::uint32_t grown = reached;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      grown |= adj_mask[v] & mask;
    }
    if (grown == reached) break;
    reached = grown;
  }
  return reached == mask;
}

}  // namespace

SpectrumResult dense_spectrum(const TransitionKernel& k) {
  Eigen::MatrixXd s = symmetrized_dense(k.P, k.pi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = Eigen::VectorXd::Ones(k.size()) - es.eigenvalues().reverse();
  return {ev, "dense-exact"};
}

double spectral_gap(const TransitionKernel& k, Eigen::Index dense_cutoff) {
  if (k.size() < 2) throw std::invalid_argument("spectral_gap: need at least two states");
  if (k.size() <= dense_cutoff) {
    SpectrumResult s = dense_spectrum(k);
    return s.eigenvalues[1];
  }
  auto [beta2, vec] = second_eigenpair_iterative(k.P, k.pi);
  return 1.0 - beta2;
}

double spectral_gap(const WeightedGraph& g) { return spectral_gap(lazy_kernel(g)); }

CheegerResult cheeger(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (!g.is_connected()) throw std::invalid_argument("cheeger: disconnected");
  if (n > 24)
    throw std::invalid_argument(
        "cheeger: graph too large for exhaustive mode; use sweep_cut_bound");
  SubsetScan scan = make_scan(g);
  // Gray-code walk over all subsets with O(deg) incremental Q and pi updates.
  double q = 0.0, mass = 0.0;
  std::uint32_t mask = 0;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    int b = std::countr_zero(k);
    bool entering = !(mask >> b & 1u);
    for (auto [y, w] : scan.adj[b]) {
      bool y_in = (mask >> y & 1u) != 0;
      // flipping b toggles the crossing status of every incident edge
      q += (y_in == entering) ? -w : w;
    }
    mask ^= 1u << b;
    mass += entering ? scan.pi[b] : -scan.pi[b];
    if (mass <= 0.5 + 1e-12 && mask != 0) {
      double ratio = q / mass;
      if (ratio < best) {
        best = ratio;
        best_mask = mask;
      }
    }
  }
  // Recompute at the argmin to shed incremental drift.
  std::vector<Index> idx;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1u) idx.push_back(v);
  CheegerResult r;
  r.argmin = VertexSet(idx, n);
  r.phi = exact_cut(scan, best_mask) / exact_mass(scan, best_mask);
  return r;
}

CheegerResult cheeger_connected_only(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("cheeger_connected_only: graph too large");
  SubsetScan scan = make_scan(g);
  std::vector<std::uint32_t> adj_mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (auto [y, w] : scan.adj[v]) adj_mask[v] |= 1u << y;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double mass = exact_mass(scan, mask);
    if (mass > 0.5 + 1e-12) continue;
    if (!mask_connected(adj_mask, mask)) continue;
    double ratio = exact_cut(scan, mask) / mass;
    if (ratio < best) {
      best = ratio;
      best_mask = mask;
    }
  }
  std::vector<Index> idx;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1u) idx.push_back(v);
  return {best, VertexSet(idx, n)};
}

double sweep_cut_bound(const WeightedGraph& g) {
  TransitionKernel k = lazy_kernel(g);
  const Eigen::Index n = k.size();
  if (n < 2) throw std::invalid_argument("sweep_cut_bound: need at least two states");
  Eigen::VectorXd sq = k.pi.cwiseSqrt();
  Eigen::VectorXd psi;
  if (n <= 3000) {
    Eigen::MatrixXd s = symmetrized_dense(k.P, k.pi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
    psi = es.eigenvectors().col(n - 2);
  } else {
    psi = second_eigenpair_iterative(k.P, k.pi).second;
  }
  Eigen::VectorXd f = psi.cwiseQuotient(sq);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });

  SubsetScan scan = make_scan(g);
  std::vector<char> in(n, 0);
  double q = 0.0, mass = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    int v = order[i];
    for (auto [y, w] : scan.adj[v]) q += in[y] ? -w : w;
    in[v] = 1;
    mass += scan.pi[v];
    double side = std::min(mass, 1.0 - mass);
    if (side > 0.0) best = std::min(best, q / side);
  }
  return best;
}

double restricted_gap(const TransitionKernel& k, const VertexSet& a, Eigen::Index dense_cutoff) {
  if (a.empty()) throw std::invalid_argument("restricted_gap: empty set");
  if (static_cast<Eigen::Index>(a.size()) == k.size())
    throw std::invalid_argument("restricted_gap: set equals the whole space");
  RestrictedKernel r = restrict_kernel(k, a);
  const Eigen::Index m = r.size();
  if (m <= dense_cutoff) {
    Eigen::MatrixXd s = symmetrized_dense(r.P, r.pi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    return 1.0 - es.eigenvalues()[m - 1];
  }
  // Substochastic Perron root by plain power iteration; spectrum of P_A is
  // nonnegative for lazy kernels.
  Eigen::VectorXd sq = r.pi.cwiseSqrt();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m).normalized();
  double beta = 0.0;
  for (long it = 1; it <= 1000000; ++it) {
    Eigen::VectorXd y = (r.P * x.cwiseQuotient(sq).eval()).cwiseProduct(sq);
    double norm = y.norm();
    if (norm == 0.0) return 1.0;
    y /= norm;
    double beta_new = y.dot((r.P * y.cwiseQuotient(sq).eval()).cwiseProduct(sq));
    if (it > 4 && std::abs(beta_new - beta) <= 1e-9 * std::max(1.0, beta_new))
      return 1.0 - beta_new;
    beta = beta_new;
    x = y;
  }
  throw std::runtime_error("restricted_gap: power iteration failed to converge");
}

double restricted_gap(const WeightedGraph& g, const VertexSet& a) {
  return restricted_gap(lazy_kernel(g), a);
}

double restricted_cheeger(const WeightedGraph& g, const VertexSet& a) {
  if (a.empty()) throw std::invalid_argument("restricted_cheeger: empty set");
  if (a.size() > 22) throw std::invalid_argument("restricted_cheeger: set too large for enumeration");
  SubsetScan scan = make_scan(g);
  const auto& idx = a.indices();
  const int m = static_cast<int>(idx.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
    std::uint32_t mask = 0;
    for (int i = 0; i < m; ++i)
      if (sub >> i & 1u) mask |= 1u << idx[i];
    best = std::min(best, exact_cut(scan, mask) / exact_mass(scan, mask));
  }
  return best;
}

SpectralProfileCurve spectral_profile(const WeightedGraph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("spectral_profile: graph too large for exact mode");
  TransitionKernel k = lazy_kernel(g);
  Eigen::MatrixXd s = symmetrized_dense(k.P, k.pi);
  std::vector<std::uint32_t> adj_mask(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && s(u, v) != 0.0) adj_mask[u] |= 1u << v;

  std::vector<std::pair<double, double>> points;  // (pi(A), lambda(A))
  Eigen::MatrixXd sub;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    double mass = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) mass += k.pi[v];
    if (mass > 0.5 + 1e-12) continue;
    if (!mask_connected(adj_mask, mask)) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) members.push_back(v);
    const int m = static_cast<int>(members.size());
    double lam;
    if (m == 1) {
      lam = 1.0 - s(members[0], members[0]);
    } else {
      sub.resize(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub(i, j) = s(members[i], members[j]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sub, Eigen::EigenvaluesOnly);
      lam = 1.0 - es.eigenvalues()[m - 1];
    }
    points.push_back({mass, lam});
  }
  if (points.empty()) throw std::runtime_error("spectral_profile: no feasible set");
  std::sort(points.begin(), points.end());
  SpectralProfileCurve curve;
  curve.method = "connected-set-exact";
  double running = std::numeric_limits<double>::infinity();
  for (auto [mass, lam] : points) {
    if (lam < running) {
      running = lam;
      if (!curve.v.empty() && mass == curve.v.back()) {
        curve.lambda.back() = lam;
      } else {
        curve.v.push_back(mass);
        curve.lambda.push_back(lam);
      }
    }
  }
  return curve;
}

double SpectralProfileCurve::at(double mass) const {
  if (v.empty() || mass < v.front() - 1e-15)
    throw std::invalid_argument("spectral profile: empty feasible set below first breakpoint");
  double out = lambda.front();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] <= mass + 1e-15) out = lambda[k];
  return out;
}

double rho_bound(double gap, const SpectralProfileCurve& profile) {
  const double half = 0.5;
  double rho = 8.0 * std::log(2.0) / gap;
  for (std::size_t k = 0; k < profile.v.size(); ++k) {
    double lo = profile.v[k];
    double hi = (k + 1 < profile.v.size()) ? std::min(profile.v[k + 1], half) : half;
    if (hi <= lo) continue;
    rho += 4.0 / profile.lambda[k] * std::log(hi / lo);
  }
  return rho;
}

double rho_bound(const WeightedGraph& g) {
  return rho_bound(spectral_gap(g), spectral_profile(g));
}

std::pair<double, double> transitive_l2_identity_check(const WeightedGraph& g, long t) {
  TransitionKernel k = lazy_kernel(g);
  const Eigen::Index n = k.size();
  Eigen::MatrixXd p = Eigen::MatrixXd(k.P);
  Eigen::MatrixXd pt = Eigen::MatrixXd::Identity(n, n);
  for (long s = 0; s < 2 * t; ++s) pt = pt * p;
  double lhs = 0.0;
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      lhs = std::max(lhs, std::abs(pt(x, y) - k.pi[y]) / k.pi[y]);
  SpectrumResult spec = dense_spectrum(k);
  KahanSum rhs;
  for (Eigen::Index i = 1; i < n; ++i)
    rhs.add(std::pow(1.0 - spec.eigenvalues[i], 2.0 * t));
  return {lhs, rhs.value()};
}

}  // namespace mixkit
