#pragma once

#include <Eigen/Sparse>
#include <memory>

#include "mixkit/graph.hpp"

namespace mixkit {

// Solver for the conductance Laplacian grounded on a boundary set: factors
// L_UU once (U = complement of the boundary) and serves repeated right-hand
// sides. Direct Cholesky-type factorization up to `direct_cutoff` unknowns,
// conjugate gradient with 1e-12 residual above. Loops drop out of L.
class GroundedLaplacian {
 public:
  GroundedLaplacian(const WeightedGraph& g, const VertexSet& boundary,
                    Eigen::Index direct_cutoff = 100000);
  ~GroundedLaplacian();
  GroundedLaplacian(GroundedLaplacian&&) noexcept;
  GroundedLaplacian& operator=(GroundedLaplacian&&) noexcept;

  // Solves L_UU x = rhs, rhs indexed by interior position.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  const std::vector<Index>& interior() const { return interior_; }
  // Position of vertex v inside the interior, or -1 on the boundary.
  Eigen::Index interior_pos(Index v) const { return pos_[v]; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::vector<Index> interior_;
  std::vector<Eigen::Index> pos_;
};

}  // namespace mixkit
