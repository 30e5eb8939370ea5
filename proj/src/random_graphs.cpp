#include "mixkit/random_graphs.hpp"

#include <random>
#include <set>

#include "mixkit/construction.hpp"

namespace mixkit {

WeightedGraph random_connected_graph(int n, int extra_edges, unsigned long long seed,
                                     const RandomGraphOptions& opts) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: empty");
  std::mt19937_64 rng(seed);
  auto weight = [&]() {
    if (opts.weight_hi <= opts.weight_lo) return opts.weight_lo;
    std::uniform_real_distribution<double> w(opts.weight_lo, opts.weight_hi);
    return w(rng);
  };
  std::vector<int> deg(n, 0);
  const int cap = opts.max_degree > 0 ? opts.max_degree : n;
  std::vector<Edge> edges;
  std::set<std::pair<Index, Index>> used;
  for (Index v = 1; v < n; ++v) {
    // random parent with an open slot; a chain always fits under cap >= 2
    Index parent = -1;
    for (int tries = 0; tries < 4 * n; ++tries) {
      std::uniform_int_distribution<Index> pick(0, v - 1);
      Index c = pick(rng);
      if (deg[c] < cap) {
        parent = c;
        break;
      }
    }
    if (parent < 0) parent = v - 1;
    edges.push_back({parent, v, weight()});
    used.insert(detail::ordered(parent, v));
    ++deg[parent];
    ++deg[v];
  }
  for (int k = 0; k < extra_edges; ++k) {
    for (int tries = 0; tries < 50; ++tries) {
      std::uniform_int_distribution<Index> pick(0, n - 1);
      Index u = pick(rng), v = pick(rng);
      if (u == v || used.count(detail::ordered(u, v))) continue;
      if (deg[u] >= cap || deg[v] >= cap) continue;
      edges.push_back({u, v, weight()});
      used.insert(detail::ordered(u, v));
      ++deg[u];
      ++deg[v];
      break;
    }
  }
  return WeightedGraph(n, std::move(edges));
}

std::vector<WeightedGraph> bound_suite_corpus(int count, int min_size, int max_size,
                                              unsigned long long seed) {
  std::vector<WeightedGraph> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    unsigned long long s = mix_seed(seed, k);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<int> size(min_size, max_size);
    const int n = size(rng);
    std::uniform_int_distribution<int> extra(0, std::max(1, n));
    RandomGraphOptions opts;
    if (k % 3 == 1) {
      opts.weight_lo = 0.5;
      opts.weight_hi = 2.0;
    }
    if (k % 4 == 2) opts.max_degree = 4;
    out.push_back(random_connected_graph(n, extra(rng), mix_seed(s, 77), opts));
  }
  return out;
}

}  // namespace mixkit
