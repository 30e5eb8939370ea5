#include "mixkit/laplacian.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <stdexcept>

namespace mixkit {

struct GroundedLaplacian::Impl {
  Eigen::SparseMatrix<double> luu;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> direct;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  bool use_direct = true;
};

GroundedLaplacian::GroundedLaplacian(const WeightedGraph& g, const VertexSet& boundary,
                                     Eigen::Index direct_cutoff)
    : impl_(std::make_unique<Impl>()) {
  const Index n = g.num_vertices();
  pos_.assign(n, -1);
  for (Index v = 0; v < n; ++v)
    if (!boundary.contains(v)) {
      pos_[v] = static_cast<Eigen::Index>(interior_.size());
      interior_.push_back(v);
    }
  if (interior_.empty()) throw std::invalid_argument("grounded laplacian: empty interior");
  const Eigen::Index m = static_cast<Eigen::Index>(interior_.size());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(4 * g.num_edges());
  for (Eigen::Index i = 0; i < m; ++i) {
    const Index v = interior_[i];
    double diag = g.strength(v) - g.loop_weight(v);
    trip.emplace_back(i, i, diag);
    for (const auto& nb : g.neighbors(v))
      if (pos_[nb.to] >= 0) trip.emplace_back(i, pos_[nb.to], -nb.c);
  }
  impl_->luu.resize(m, m);
  impl_->luu.setFromTriplets(trip.begin(), trip.end());
  impl_->luu.makeCompressed();
  impl_->use_direct = m <= direct_cutoff;
  if (impl_->use_direct) {
    impl_->direct.compute(impl_->luu);
    if (impl_->direct.info() != Eigen::Success)
      throw std::runtime_error("grounded laplacian: factorization failed (singular system)");
  } else {
    impl_->cg.setTolerance(1e-12);
    impl_->cg.compute(impl_->luu);
  }
}

GroundedLaplacian::~GroundedLaplacian() = default;
GroundedLaplacian::GroundedLaplacian(GroundedLaplacian&&) noexcept = default;
GroundedLaplacian& GroundedLaplacian::operator=(GroundedLaplacian&&) noexcept = default;

Eigen::VectorXd GroundedLaplacian::solve(const Eigen::VectorXd& rhs) const {
  if (impl_->use_direct) {
    Eigen::VectorXd x = impl_->direct.solve(rhs);
    if (impl_->direct.info() != Eigen::Success)
      throw std::runtime_error("grounded laplacian: solve failed");
    return x;
  }
  Eigen::VectorXd x = impl_->cg.solve(rhs);
  if (impl_->cg.info() != Eigen::Success)
    throw std::runtime_error("grounded laplacian: conjugate gradient did not converge");
  return x;
}

}  // namespace mixkit
