#include "mixkit/electrical.hpp"

#include <cmath>
#include <stdexcept>

#include "mixkit/laplacian.hpp"
#include "mixkit/mixing.hpp"

namespace mixkit {

double effective_conductance(const WeightedGraph& g, Index s, const VertexSet& sinks) {
  if (sinks.empty()) throw std::invalid_argument("effective_conductance: no sinks");
  if (sinks.contains(s)) throw std::invalid_argument("effective_conductance: source is a sink");
  if (!g.is_connected()) throw std::invalid_argument("effective_conductance: disconnected");
  std::vector<Index> bd = sinks.indices();
  bd.push_back(s);
  VertexSet boundary(bd, g.num_vertices());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(g.num_vertices());
  v[s] = 1.0;
  if (boundary.size() < static_cast<std::size_t>(g.num_vertices())) {
    GroundedLaplacian solver(g, boundary);
    const auto& interior = solver.interior();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(interior.size());
    for (std::size_t i = 0; i < interior.size(); ++i)
      for (const auto& nb : g.neighbors(interior[i]))
        if (nb.to == s) rhs[i] += nb.c;
    Eigen::VectorXd sol = solver.solve(rhs);
    for (std::size_t i = 0; i < interior.size(); ++i) v[interior[i]] = sol[i];
  }
  KahanSum current;
  for (const auto& nb : g.neighbors(s)) current.add(nb.c * (1.0 - v[nb.to]));
  return current.value();
}

Distribution harmonic_measure(const WeightedGraph& g, Index start, const VertexSet& boundary) {
  if (boundary.empty()) throw std::invalid_argument("harmonic_measure: empty boundary");
  const Index n = g.num_vertices();
  if (boundary.contains(start)) return Distribution::point_mass(n, start);

  // Reachability of the boundary from the start.
  {
    std::vector<char> seen(n, 0);
    std::vector<Index> stack{start};
    seen[start] = 1;
    bool reached = false;
    while (!stack.empty() && !reached) {
      Index v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (boundary.contains(nb.to)) {
          reached = true;
          break;
        }
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          stack.push_back(nb.to);
        }
      }
    }
    if (!reached) throw std::invalid_argument("harmonic_measure: boundary unreachable");
  }

  // alpha(b) = sum_x z(x) P(x,b) with (I-Q)^T z = e_start; via the Laplacian
  // this is alpha(b) = (1/2) sum_x y(x) c_{xb} where L_UU y = 2 e_start.
  GroundedLaplacian solver(g, boundary);
  const auto& interior = solver.interior();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(interior.size());
  rhs[solver.interior_pos(start)] = 2.0;
  Eigen::VectorXd y = solver.solve(rhs);
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < interior.size(); ++i)
    for (const auto& nb : g.neighbors(interior[i]))
      if (boundary.contains(nb.to)) alpha[nb.to] += 0.5 * y[i] * nb.c;
  return Distribution::from_vector(std::move(alpha));
}

StretchedTree build_stretched_binary_tree(const StretchedTreeSpec& spec) {
  if (spec.depth < 1) throw std::invalid_argument("stretched tree: depth must be >= 1");
  if (spec.left_stretch < 1 || spec.right_stretch < 1)
    throw std::invalid_argument("stretched tree: stretches must be >= 1");
  // Skeleton first (unit edges), then stretch; original indices survive.
  const Index n = (1 << (spec.depth + 1)) - 1;
  std::vector<Edge> edges;
  StretchedTree t;
  t.levels.assign(spec.depth + 1, {});
  t.left_count.assign(n, 0);
  t.left_child.assign(n, -1);
  t.right_child.assign(n, -1);
  t.parent.assign(n, -1);
  std::vector<std::tuple<Index, Index, int>> factors;
  Index next = 1;
  t.levels[0] = {0};
  for (int level = 0; level < spec.depth; ++level) {
    for (Index u : t.levels[level]) {
      Index l = next++, r = next++;
      t.levels[level + 1].push_back(l);
      t.levels[level + 1].push_back(r);
      t.left_child[u] = l;
      t.right_child[u] = r;
      t.parent[l] = u;
      t.parent[r] = u;
      t.left_count[l] = t.left_count[u] + 1;
      t.left_count[r] = t.left_count[u];
      edges.push_back({u, l, 1.0});
      edges.push_back({u, r, 1.0});
      factors.emplace_back(u, l, spec.left_stretch);
      factors.emplace_back(u, r, spec.right_stretch);
    }
  }
  WeightedGraph skeleton(n, std::move(edges));
  t.graph = stretch_edges(skeleton, factors);
  t.left_count.resize(t.graph.num_vertices(), -1);
  t.left_child.resize(t.graph.num_vertices(), -1);
  t.right_child.resize(t.graph.num_vertices(), -1);
  t.parent.resize(t.graph.num_vertices(), -1);
  t.root = 0;
  return t;
}

TreeFixedPoint tree_fixed_point(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("tree_fixed_point: q must be positive");
  const double rt2 = std::sqrt(2.0);
  TreeFixedPoint f;
  f.w = 1.0 / (rt2 * q);
  f.w_left = 1.0 / ((1.0 + rt2) * q);
  f.w_right = f.w - f.w_left;
  return f;
}

double truncated_tree_conductance(int depth, double left_stretch, double right_stretch) {
  if (depth < 1) throw std::invalid_argument("truncated_tree_conductance: depth must be >= 1");
  double inv_w = 0.0;  // ground sits at the current level
  for (int k = 1; k <= depth; ++k) {
    double w = 1.0 / (left_stretch + inv_w) + 1.0 / (right_stretch + inv_w);
    inv_w = 1.0 / w;
  }
  return 1.0 / inv_w;
}

std::pair<double, double> truncated_tree_arm_conductances(int depth, double left_stretch,
                                                          double right_stretch) {
  double inv_below = depth >= 2
                         ? 1.0 / truncated_tree_conductance(depth - 1, left_stretch, right_stretch)
                         : 0.0;
  return {1.0 / (left_stretch + inv_below), 1.0 / (right_stretch + inv_below)};
}

double truncated_tree_left_prob(const StretchedTreeSpec& spec) {
  if (spec.depth <= 11) {
    StretchedTree t = build_stretched_binary_tree(spec);
    // Absorbed-left = hits a deepest-level vertex under the left child first.
    std::vector<Index> left, right;
    for (Index v : t.levels[spec.depth]) {
      Index up = v;
      while (t.parent[up] != t.root) up = t.parent[up];
      (up == t.left_child[t.root] ? left : right).push_back(v);
    }
    HittingSolveResult h = hit_probability(t.graph, VertexSet(left, t.graph.num_vertices()),
                                           VertexSet(right, t.graph.num_vertices()));
    return h.value[t.root];
  }
  auto [cl, cr] = truncated_tree_arm_conductances(spec.depth, spec.left_stretch,
                                                  spec.right_stretch);
  return cl / (cl + cr);
}

}  // namespace mixkit
