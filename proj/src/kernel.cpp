#include "mixkit/kernel.hpp"

#include <stdexcept>
#include <vector>

namespace mixkit {

TransitionKernel lazy_kernel(const WeightedGraph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("lazy_kernel: empty graph");
  if (!g.is_connected()) throw std::invalid_argument("lazy_kernel: disconnected");
  const Index n = g.num_vertices();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(2 * g.num_edges() + n);
  Eigen::VectorXd pi(n);
  const double cv_total = g.total_strength();
  for (Index v = 0; v < n; ++v) {
    const double cv = g.strength(v);
    if (!(cv > 0.0)) throw std::invalid_argument("lazy_kernel: zero-degree vertex");
    trip.emplace_back(v, v, 0.5 + g.loop_weight(v) / (2.0 * cv));
    for (const auto& nb : g.neighbors(v)) trip.emplace_back(v, nb.to, nb.c / (2.0 * cv));
    pi[v] = cv / cv_total;
  }
  TransitionKernel k;
  k.P.resize(n, n);
  k.P.setFromTriplets(trip.begin(), trip.end());
  k.P.makeCompressed();
  k.pi = std::move(pi);
  k.tag = TransitionKernel::Tag::Lazy;
  return k;
}

Distribution stationary(const WeightedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("stationary: disconnected");
  const Index n = g.num_vertices();
  Eigen::VectorXd pi(n);
  const double cv_total = g.total_strength();
  for (Index v = 0; v < n; ++v) pi[v] = g.strength(v) / cv_total;
  return Distribution::from_vector(std::move(pi));
}

RestrictedKernel restrict_kernel(const TransitionKernel& k, const VertexSet& a) {
  const Eigen::Index n = k.size();
  if (a.empty()) throw std::invalid_argument("restrict_kernel: empty set");
  if (static_cast<Eigen::Index>(a.size()) == n)
    throw std::invalid_argument("restrict_kernel: set equals the whole space");
  std::vector<Eigen::Index> pos(n, -1);
  const auto& idx = a.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<Eigen::Index>(i);
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd pi(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    pi[i] = k.pi[idx[i]];
    for (SparseRowMatrix::InnerIterator it(k.P, idx[i]); it; ++it)
      if (pos[it.col()] >= 0) trip.emplace_back(i, pos[it.col()], it.value());
  }
  RestrictedKernel r;
  r.P.resize(idx.size(), idx.size());
  r.P.setFromTriplets(trip.begin(), trip.end());
  r.P.makeCompressed();
  r.pi = std::move(pi);
  r.support = a;
  return r;
}

double reversibility_defect(const TransitionKernel& k) {
  double worst = 0.0, scale = 0.0;
  for (Eigen::Index u = 0; u < k.size(); ++u)
    for (SparseRowMatrix::InnerIterator it(k.P, u); it; ++it) {
      const double fwd = k.pi[u] * it.value();
      const double bwd = k.pi[it.col()] * k.P.coeff(it.col(), u);
      worst = std::max(worst, std::abs(fwd - bwd));
      scale = std::max(scale, std::abs(fwd));
    }
  return scale > 0.0 ? worst / scale : worst;
}

Eigen::VectorXd evolve(const SparseRowMatrix& P, Eigen::VectorXd mu, long t) {
  if (t < 0) throw std::invalid_argument("evolve: negative time");
  for (long s = 0; s < t; ++s) mu = P.transpose() * mu;
  return mu;
}

Distribution evolve(const TransitionKernel& k, const Distribution& mu, long t) {
  return Distribution::unchecked(evolve(k.P, mu.vec(), t), mu.sub_probability());
}

Eigen::MatrixXd symmetrized_dense(const SparseRowMatrix& P, const Eigen::VectorXd& pi) {
  const Eigen::Index n = P.rows();
  Eigen::VectorXd sq = pi.cwiseSqrt();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (SparseRowMatrix::InnerIterator it(P, u); it; ++it)
      s(u, it.col()) = sq[u] * it.value() / sq[it.col()];
  // Exact symmetry for the eigensolver; reversibility holds to rounding.
  return 0.5 * (s + s.transpose());
}

}  // namespace mixkit
