#pragma once

#include "mixkit/graph.hpp"

namespace mixkit {

struct RandomGraphOptions {
  int max_degree = 0;      // 0 = uncapped
  double weight_lo = 1.0;  // weights drawn uniformly from [lo, hi]; lo == hi means unit
  double weight_hi = 1.0;
};

// Seeded connected graph: random recursive tree plus extra random edges,
// optionally degree-capped and weighted.
WeightedGraph random_connected_graph(int n, int extra_edges, unsigned long long seed,
                                     const RandomGraphOptions& opts = {});

// Mixed corpus used by the bound suites: sizes in [min_size, max_size],
// alternating unit/weighted and sparse/dense instances.
std::vector<WeightedGraph> bound_suite_corpus(int count, int min_size, int max_size,
                                              unsigned long long seed);

}  // namespace mixkit
