#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixkit/kernel.hpp"

namespace mixkit {

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // of I - P, ascending; eigenvalues[0] ~ 0
  std::string method;           // "dense-exact" | "iterative"
};

struct CheegerResult {
  double phi = 0.0;
  VertexSet argmin;
};

struct SpectralProfileCurve {
  std::vector<double> v;       // breakpoint masses, ascending, v[0] = min_x pi(x)
  std::vector<double> lambda;  // value of Lambda on [v[k], v[k+1])
  std::string method;

  // Lambda(v); error below the first breakpoint (empty feasible set).
  double at(double mass) const;
};

// Full spectrum of I - P via the pi-symmetrized similarity; dense.
SpectrumResult dense_spectrum(const TransitionKernel& k);

// lambda_2 of I - P. Dense solve up to `dense_cutoff` vertices, deflated
// power iteration above (relative tolerance 1e-9, capped iterations).
double spectral_gap(const TransitionKernel& k, Eigen::Index dense_cutoff = 3000);
double spectral_gap(const WeightedGraph& g);

// Exact Cheeger constant by exhaustive enumeration (N <= 24): min over
// 0 < pi(A) <= 1/2 of Q(A)/pi(A), Q(A) = sum_{x in A, y notin A} pi(x)P(x,y).
CheegerResult cheeger(const WeightedGraph& g);

// Fiedler-sweep upper bound on the Cheeger constant; always >= cheeger().phi.
double sweep_cut_bound(const WeightedGraph& g);

// Smallest eigenvalue of (I - P) restricted to A.
double restricted_gap(const TransitionKernel& k, const VertexSet& a,
                      Eigen::Index dense_cutoff = 3000);
double restricted_gap(const WeightedGraph& g, const VertexSet& a);

// Phi(A) = min over nonempty B subseteq A of Q(B)/pi(B); |A| <= 22.
double restricted_cheeger(const WeightedGraph& g, const VertexSet& a);

// Lambda(v) = inf over connected A with pi(A) <= v of lambda(A); N <= 20.
// Connected sets suffice: a disconnected set's lambda equals the minimum
// over its components, each of smaller mass.
SpectralProfileCurve spectral_profile(const WeightedGraph& g);

// rho = 8 log(2)/lambda + int_{min pi}^{1/2} 4 dv / (v Lambda(v)), evaluated
// in closed form on the piecewise-constant profile.
double rho_bound(const WeightedGraph& g);
double rho_bound(double gap, const SpectralProfileCurve& profile);

// For a vertex-transitive graph: lhs = max_x ||Pr_x^{2t} - pi||_{inf,pi},
// rhs = sum_{i>=2} beta_i^{2t} with beta_i the eigenvalues of P. Equal for
// transitive chains.
std::pair<double, double> transitive_l2_identity_check(const WeightedGraph& g, long t);

// Debug variant of the Cheeger search restricted to connected sets only;
// used to validate that a minimizer may be taken connected (N <= 14).
CheegerResult cheeger_connected_only(const WeightedGraph& g);

}  // namespace mixkit
