#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "mixkit/distribution.hpp"
#include "mixkit/graph.hpp"

namespace mixkit {

using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Row-stochastic one-step operator of the lazy walk, together with the
// stationary distribution of its host graph.
struct TransitionKernel {
  enum class Tag { Lazy, RestrictedToSet };

  SparseRowMatrix P;
  Eigen::VectorXd pi;  // stationary law (lazy) or host pi restricted to the set
  Tag tag = Tag::Lazy;

  Eigen::Index size() const { return P.rows(); }
};

// Substochastic restriction of a kernel to a vertex set, with the original
// indices retained for mapping back.
struct RestrictedKernel {
  SparseRowMatrix P;
  Eigen::VectorXd pi;  // host stationary mass on the set (not renormalized)
  VertexSet support;

  Eigen::Index size() const { return P.rows(); }
};

// P(v,v) = 1/2 + c_loop(v)/(2 c_v), P(v,u) = c_{uv}/(2 c_v).
TransitionKernel lazy_kernel(const WeightedGraph& g);

// pi(x) = c_x / c_V.
Distribution stationary(const WeightedGraph& g);

RestrictedKernel restrict_kernel(const TransitionKernel& k, const VertexSet& a);

// max_u,v |pi(u)P(u,v) - pi(v)P(v,u)| / max entry; 0 for exactly reversible.
double reversibility_defect(const TransitionKernel& k);

// mu P^t by t sparse applications (mu as a column of masses).
Eigen::VectorXd evolve(const SparseRowMatrix& P, Eigen::VectorXd mu, long t);
Distribution evolve(const TransitionKernel& k, const Distribution& mu, long t);

// Symmetrized similarity D^{1/2} P D^{-1/2} of a reversible kernel; dense.
Eigen::MatrixXd symmetrized_dense(const SparseRowMatrix& P, const Eigen::VectorXd& pi);

}  // namespace mixkit
