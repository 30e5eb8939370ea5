#pragma once

#include <string>
#include <vector>

#include "mixkit/graph.hpp"

namespace mixkit {

// Per-island parameters of the scaled two-family construction. Vectors are
// indexed by island - 1 for islands 1..n. Island 1 carries good leaves only;
// its tree has depth fh_depth(1) + good_extra_depth(1) and every edge is
// short-stretched.
struct FamilyParams {
  int n = 2;
  std::vector<int> fh_depth;         // first-half depth, even
  std::vector<int> good_extra_depth; // >= 1
  std::vector<int> gmp_threshold;    // >= 1, < fh_depth
  std::vector<long> bad_leaf_target; // even, >= 2
  int short_stretch = 2;
  std::vector<int> q;                // long stretch; > short_stretch, ratio ~ sqrt(2)
  int expander_degree = 3;
  // Lazy-walk gap floor for accepted expanders. A 3-regular graph's lazy gap
  // cannot exceed 1/2 - sqrt(2)/3 + o(1) ~ 0.0286, so the floor sits below
  // that ceiling while still rejecting bad samples.
  double expander_gap_threshold = 0.02;
  unsigned long long seed = 1;
  long vertex_budget = 100000;

  void validate() const;
  static FamilyParams scaled_defaults(int n, unsigned long long seed = 1);

  int fh(int island) const { return fh_depth[island - 1]; }
  int extra(int island) const { return good_extra_depth[island - 1]; }
  int threshold(int island) const { return gmp_threshold[island - 1]; }
  long bl_target(int island) const { return bad_leaf_target[island - 1]; }
  int stretch_q(int island) const { return q[island - 1]; }
};

// Unstretched island tree with its named vertex classes and g-tags.
struct TreeSkeleton {
  WeightedGraph graph;  // unit edges
  Index root = 0;
  int island = 1;
  std::vector<Index> gmp, bmp, gl, bl, pgl, pbl;
  std::vector<int> g_value;                          // Left - Right along the root path
  std::vector<char> good_side;                       // GMP and descendants
  std::vector<std::pair<Index, Index>> fh_right_edges;  // first-half right-child edges
};

// Stretched island tree; skeleton indices survive the stretch.
struct IslandTree {
  WeightedGraph graph;
  Index root = 0;
  int island = 1;
  bool primed = false;
  std::vector<Index> gmp, bmp, gl, bl, pgl, pbl;
  // Aligned member lists of the hanging subtree at each parent-of-leaves
  // vertex (the vertex, both stretch paths, both leaves); positionally
  // isomorphic across parents of the same class.
  std::vector<std::vector<Index>> pgl_subtree, pbl_subtree;
};

TreeSkeleton build_tree_bs(int island, const FamilyParams& p);
IslandTree stretch_family_tree(const TreeSkeleton& skel, const FamilyParams& p, bool primed);

// Seeded random 3-regular graph, resampled until simple, connected, and
// spectral_gap >= gap_threshold. Deterministic in the seed.
WeightedGraph random_regular_expander(int size, int degree, double gap_threshold,
                                      unsigned long long seed);

// Expander used inside the construction: complete graph below size 4 (a
// 3-regular simple graph needs at least 4 vertices), random 3-regular above.
WeightedGraph small_expander(int size, double gap_threshold, unsigned long long seed);

// Expander modification near the leaves: identifies parents of good (bad)
// leaves with a half-size 3-regular expander and joins the hanging subtrees
// under the positional isomorphism. Island 1 modifies the good side only.
IslandTree build_W(IslandTree t, const FamilyParams& p);

struct LabeledFamily {
  WeightedGraph graph;
  int n = 0;
  bool primed = false;
  std::vector<Index> o;          // island roots, o[i-1]
  std::vector<VertexSet> R, Bad, Good, GL, BL, GMP, Nice_parts;
  VertexSet nice;                // union of nice parts
  VertexSet good_union;          // overlay expander support V(H)
  std::vector<long> h_size;      // |V(H_i)|
};

LabeledFamily build_family(const FamilyParams& p, bool primed);

// Connected component of o_n once Nice is removed (Nice itself excluded).
VertexSet small_component(const LabeledFamily& fam);

WeightedGraph torus(int side, int dim);
WeightedGraph hypercube(int dim);
WeightedGraph complete_graph(int m);

// Deterministic stream splitting for sub-seeds.
unsigned long long mix_seed(unsigned long long seed, unsigned long long stream);

}  // namespace mixkit
