#pragma once

#include <utility>

#include "mixkit/distribution.hpp"
#include "mixkit/graph.hpp"

namespace mixkit {

// Effective conductance between s and a sink set: unit voltage at s, sinks
// grounded; returns the current out of s.
double effective_conductance(const WeightedGraph& g, Index s, const VertexSet& sinks);

// Distribution of the walk's first hitting position on `boundary`, started
// at `start`. One grounded-Laplacian solve.
Distribution harmonic_measure(const WeightedGraph& g, Index start, const VertexSet& boundary);

// Binary tree with every left-child edge stretched by `left_stretch` and
// every right-child edge by `right_stretch`; `depth` counts branching levels.
struct StretchedTreeSpec {
  int depth = 1;
  int left_stretch = 1;
  int right_stretch = 2;
  enum class Boundary { Absorbing, Reflecting } boundary = Boundary::Absorbing;
};

struct StretchedTree {
  WeightedGraph graph;
  Index root = 0;
  std::vector<std::vector<Index>> levels;  // branching vertices per level
  std::vector<int> left_count;             // left turns on the root path; -1 off the skeleton
  std::vector<Index> left_child, right_child, parent;  // -1 where absent
};

StretchedTree build_stretched_binary_tree(const StretchedTreeSpec& spec);

// Root-to-infinity conductances of the infinite tree: w = 1/(sqrt(2) q),
// w_L = 1/((1+sqrt(2)) q), w_R = w - w_L. The left/right escape split
// w_L / w = sqrt(2)/(1+sqrt(2)) is the drift that separates the stretched
// and unstretched walks.
struct TreeFixedPoint {
  double w = 0.0, w_left = 0.0, w_right = 0.0;
};
TreeFixedPoint tree_fixed_point(double q);

// Conductance from the root of a depth-`depth` stretched tree to its
// grounded deepest level; exact series-parallel level recursion.
double truncated_tree_conductance(int depth, double left_stretch, double right_stretch);

// Arm conductances (C_L, C_R) from the root toward ground.
std::pair<double, double> truncated_tree_arm_conductances(int depth, double left_stretch,
                                                          double right_stretch);

// Probability that the walk from the root is absorbed below the left child
// when the deepest level is grounded. Converges to sqrt(2)/(1+sqrt(2)) for
// (q, 2q) stretches as depth grows. Explicit build + hitting solve up to
// depth 11, exact level recursion beyond (the two routes agree; the explicit
// graph doubles per level).
double truncated_tree_left_prob(const StretchedTreeSpec& spec);

}  // namespace mixkit
