#include "mixkit/construction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "mixkit/spectral.hpp"

namespace mixkit {

unsigned long long mix_seed(unsigned long long seed, unsigned long long stream) {
  unsigned long long z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void FamilyParams::validate() const {
  if (n < 1) throw std::invalid_argument("params: n must be >= 1");
  auto need = [&](std::size_t got, const char* name) {
    if (got != static_cast<std::size_t>(n))
      throw std::invalid_argument(std::string("params: ") + name + " must have n entries");
  };
  need(fh_depth.size(), "fh_depth");
  need(good_extra_depth.size(), "good_extra_depth");
  need(gmp_threshold.size(), "gmp_threshold");
  need(bad_leaf_target.size(), "bad_leaf_target");
  need(q.size(), "q");
  if (short_stretch < 1) throw std::invalid_argument("params: short_stretch must be >= 1");
  if (expander_degree != 3) throw std::invalid_argument("params: expander degree is fixed at 3");
  for (int i = 1; i <= n; ++i) {
    if (fh_depth[i - 1] < 2 || fh_depth[i - 1] % 2 != 0)
      throw std::invalid_argument("params: fh_depth must be even and >= 2");
    if (good_extra_depth[i - 1] < 1)
      throw std::invalid_argument("params: good_extra_depth must be >= 1");
    if (i > 1 && (gmp_threshold[i - 1] < 1 || gmp_threshold[i - 1] >= fh_depth[i - 1]))
      throw std::invalid_argument("params: gmp_threshold must lie in [1, fh_depth)");
    if (i > 1 && (bad_leaf_target[i - 1] < 2 || bad_leaf_target[i - 1] % 2 != 0))
      throw std::invalid_argument("params: bad_leaf_target must be even and >= 2");
    if (q[i - 1] <= short_stretch)
      throw std::invalid_argument("params: q must exceed short_stretch");
  }
  const double rt2 = std::sqrt(2.0);
  for (int i = 1; i < n; ++i) {
    if (q[i - 1] < q[i]) throw std::invalid_argument("params: q must be nonincreasing");
    double ratio = static_cast<double>(q[i - 1]) / static_cast<double>(q[i]);
    if (std::abs(ratio - rt2) > 0.2)
      throw std::invalid_argument("params: consecutive q ratio must stay near sqrt(2)");
  }
}

FamilyParams FamilyParams::scaled_defaults(int n, unsigned long long seed) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("scaled_defaults: tuned tables cover n in 1..4");
  FamilyParams p;
  p.n = n;
  p.seed = seed;
  p.short_stretch = 2;
  // Island 2 is the heavy stage (deep first half, wide bad set); later
  // islands stay shallow so the coordinate-expander sizes, which multiply
  // the products of all later bad-leaf counts, stay inside the budget.
  switch (n) {
    case 1:
      p.fh_depth = {2};
      p.good_extra_depth = {2};
      p.gmp_threshold = {1};
      p.bad_leaf_target = {2};
      p.q = {23};
      break;
    case 2:
      p.fh_depth = {2, 4};
      p.good_extra_depth = {2, 6};
      p.gmp_threshold = {1, 1};
      p.bad_leaf_target = {2, 10};
      p.q = {23, 16};
      break;
    case 3:
      p.fh_depth = {2, 4, 2};
      p.good_extra_depth = {2, 6, 4};
      p.gmp_threshold = {1, 1, 1};
      p.bad_leaf_target = {2, 10, 2};
      p.q = {23, 16, 11};
      break;
    case 4:
      p.fh_depth = {2, 4, 2, 2};
      p.good_extra_depth = {2, 6, 4, 4};
      p.gmp_threshold = {1, 1, 1, 1};
      p.bad_leaf_target = {2, 10, 2, 2};
      p.q = {23, 16, 11, 8};
      break;
  }
  return p;
}

namespace {

int ceil_log2_ratio(long target, long count) {
  // ceil(log2(target / count)) for positive integers
  int b = 0;
  long reach = count;
  while (reach < target) {
    reach <<= 1;
    ++b;
  }
  return b;
}

}  // namespace

TreeSkeleton build_tree_bs(int island, const FamilyParams& p) {
  TreeSkeleton t;
  t.island = island;
  t.root = 0;
  const std::string prefix = "i" + std::to_string(island) + ":";
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.push_back(prefix + "o");
  t.g_value.push_back(0);
  Index next = 1;
  auto new_vertex = [&](int g) {
    labels.push_back(prefix + std::to_string(next));
    t.g_value.push_back(g);
    return next++;
  };

  if (island == 1) {
    // Good leaves only: one full binary tree.
    const int depth = p.fh(1) + p.extra(1);
    std::vector<Index> level{0};
    for (int d = 0; d < depth; ++d) {
      std::vector<Index> below;
      for (Index u : level) {
        Index l = new_vertex(t.g_value[u] + 1), r = new_vertex(t.g_value[u] - 1);
        edges.push_back({u, l, 1.0});
        edges.push_back({u, r, 1.0});
        below.push_back(l);
        below.push_back(r);
        if (d + 1 == depth) {
          t.pgl.push_back(u);
          t.gl.push_back(l);
          t.gl.push_back(r);
        }
      }
      level = std::move(below);
    }
    t.graph = WeightedGraph(next, std::move(edges), std::move(labels));
    t.good_side.assign(next, 1);
    return t;
  }

  const int d = p.fh(island);
  const int theta = p.threshold(island);
  std::vector<Index> level{0};
  for (int depth = 0; depth < d; ++depth) {
    std::vector<Index> below;
    for (Index u : level) {
      Index l = new_vertex(t.g_value[u] + 1), r = new_vertex(t.g_value[u] - 1);
      edges.push_back({u, l, 1.0});
      edges.push_back({u, r, 1.0});
      t.fh_right_edges.push_back({u, r});
      below.push_back(l);
      below.push_back(r);
    }
    level = std::move(below);
  }
  for (Index u : level) (t.g_value[u] <= theta ? t.gmp : t.bmp).push_back(u);
  if (t.bmp.empty()) throw std::invalid_argument("build_tree_bs: threshold too large (no bad middle points)");

  auto extend = [&](const std::vector<Index>& middles, int depth, std::vector<Index>& leaves,
                    std::vector<Index>& parents) {
    for (Index m : middles) {
      std::vector<Index> lvl{m};
      for (int e = 0; e < depth; ++e) {
        std::vector<Index> below;
        for (Index u : lvl) {
          Index l = new_vertex(0), r = new_vertex(0);
          edges.push_back({u, l, 1.0});
          edges.push_back({u, r, 1.0});
          below.push_back(l);
          below.push_back(r);
          if (e + 1 == depth) {
            parents.push_back(u);
            leaves.push_back(l);
            leaves.push_back(r);
          }
        }
        lvl = std::move(below);
      }
    }
  };

  // Good side: full binary extension of depth good_extra_depth. Everything
  // created here, plus the GMP vertices themselves, forms the good side.
  extend(t.gmp, p.extra(island), t.gl, t.pgl);
  std::vector<char> good_mark(next, 1);
  for (Index v = 0; v <= level.back(); ++v) good_mark[v] = 0;
  for (Index m : t.gmp) good_mark[m] = 1;

  // Bad side: depth chosen so bad_leaf_target <= |BL| <= 2 * bad_leaf_target.
  const long target = p.bl_target(island);
  const long bmp_count = static_cast<long>(t.bmp.size());
  int b = std::max(1, ceil_log2_ratio(target, bmp_count));
  long bl_count = bmp_count << b;
  if (bl_count % 2 != 0) {
    ++b;
    bl_count <<= 1;
  }
  if (bl_count < target || bl_count > 2 * target)
    throw std::invalid_argument(
        "build_tree_bs: bad_leaf_target incompatible with bad-middle-point count (" +
        std::to_string(bmp_count) + " middle points, target " + std::to_string(target) + ")");
  good_mark.resize(next, 0);
  for (Index m : t.bmp) {
    std::vector<Index> lvl{m};
    for (int e = 0; e < b; ++e) {
      std::vector<Index> below;
      for (Index u : lvl) {
        Index l = new_vertex(0), r = new_vertex(0);
        edges.push_back({u, l, 1.0});
        edges.push_back({u, r, 1.0});
        below.push_back(l);
        below.push_back(r);
        if (e + 1 == b) {
          t.pbl.push_back(u);
          t.bl.push_back(l);
          t.bl.push_back(r);
        }
      }
      lvl = std::move(below);
    }
  }
  good_mark.resize(next, 0);
  t.graph = WeightedGraph(next, std::move(edges), std::move(labels));
  t.good_side.assign(good_mark.begin(), good_mark.end());
  return t;
}

IslandTree stretch_family_tree(const TreeSkeleton& skel, const FamilyParams& p, bool primed) {
  const int island = skel.island;
  std::map<std::pair<Index, Index>, char> right_edge;
  for (auto [u, v] : skel.fh_right_edges) right_edge[detail::ordered(u, v)] = 1;
  std::vector<std::tuple<Index, Index, int>> factors;
  factors.reserve(skel.graph.num_edges());
  for (const auto& e : skel.graph.edges()) {
    int f;
    if (island == 1) {
      f = p.short_stretch;
    } else if (skel.good_side[e.u] && skel.good_side[e.v]) {
      f = p.short_stretch;
    } else {
      f = p.stretch_q(island);
      if (primed && right_edge.count({e.u, e.v})) f *= 2;
    }
    factors.emplace_back(e.u, e.v, f);
  }
  auto stretched = stretch_edges_with_paths(skel.graph, factors);

  IslandTree t;
  t.graph = std::move(stretched.graph);
  t.root = skel.root;
  t.island = island;
  t.primed = primed;
  t.gmp = skel.gmp;
  t.bmp = skel.bmp;
  t.gl = skel.gl;
  t.bl = skel.bl;
  t.pgl = skel.pgl;
  t.pbl = skel.pbl;

  auto chain_between = [&](Index a, Index c) {
    auto it = stretched.chains.find(detail::ordered(a, c));
    std::vector<Index> out;
    if (it != stretched.chains.end()) {
      out = it->second;
      if (a > c) std::reverse(out.begin(), out.end());
    }
    return out;  // oriented from a to c
  };
  auto build_subtrees = [&](const std::vector<Index>& parents, const std::vector<Index>& leaves,
                            std::vector<std::vector<Index>>& out) {
    std::map<Index, std::vector<Index>> kids;
    for (Index leaf : leaves) {
      // skeleton leaf degree is 1; its unique neighbor is the parent
      Index par = skel.graph.neighbors(leaf).front().to;
      kids[par].push_back(leaf);
    }
    out.clear();
    for (Index u : parents) {
      auto& ch = kids.at(u);
      std::sort(ch.begin(), ch.end());
      std::vector<Index> members{u};
      for (Index c : ch) {
        auto path = chain_between(u, c);
        members.insert(members.end(), path.begin(), path.end());
        members.push_back(c);
      }
      out.push_back(std::move(members));
    }
  };
  build_subtrees(t.pgl, t.gl, t.pgl_subtree);
  if (!t.pbl.empty()) build_subtrees(t.pbl, t.bl, t.pbl_subtree);
  return t;
}

namespace {

WeightedGraph random_graph_with_degrees(const std::vector<int>& degs, unsigned long long seed,
                                        double gap_threshold, int max_attempts) {
  const int n = static_cast<int>(degs.size());
  std::vector<Index> stubs;
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < degs[v]; ++k) stubs.push_back(v);
  if (stubs.size() % 2 != 0)
    throw std::invalid_argument("random regular graph: odd stub count");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Index> perm = stubs;
    for (std::size_t k = perm.size(); k > 1; --k) {
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      std::swap(perm[pick(rng)], perm[k - 1]);
    }
    bool simple = true;
    std::map<std::pair<Index, Index>, char> seen;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < perm.size(); k += 2) {
      Index u = perm[k], v = perm[k + 1];
      if (u == v || seen.count(detail::ordered(u, v))) {
        simple = false;
        break;
      }
      seen[detail::ordered(u, v)] = 1;
      edges.push_back({u, v, 1.0});
    }
    if (!simple) continue;
    WeightedGraph g(n, std::move(edges));
    if (!g.is_connected()) continue;
    if (gap_threshold > 0.0 && spectral_gap(g) < gap_threshold) continue;
    return g;
  }
  throw std::runtime_error("random regular graph on " + std::to_string(n) + " vertices: rejected " +
                           std::to_string(max_attempts) + " samples");
}

}  // namespace

WeightedGraph random_regular_expander(int size, int degree, double gap_threshold,
                                      unsigned long long seed) {
  if (static_cast<long>(size) * degree % 2 != 0)
    throw std::invalid_argument("random_regular_expander: size * degree must be even");
  if (size <= degree)
    throw std::invalid_argument("random_regular_expander: size must exceed degree");
  return random_graph_with_degrees(std::vector<int>(size, degree), seed, gap_threshold, 100);
}

WeightedGraph small_expander(int size, double gap_threshold, unsigned long long seed) {
  if (size < 1) throw std::invalid_argument("small_expander: empty");
  if (size <= 4) return complete_graph(size);
  if (size % 2 == 0) return random_regular_expander(size, 3, gap_threshold, seed);
  // Odd order: one vertex of degree 4 keeps the stub count even.
  std::vector<int> degs(size, 3);
  degs[0] = 4;
  return random_graph_with_degrees(degs, seed, gap_threshold, 100);
}

IslandTree build_W(IslandTree t, const FamilyParams& p) {
  auto connect = [&](const std::vector<Index>& parents,
                     const std::vector<std::vector<Index>>& subtrees, unsigned long long seed) {
    if (parents.size() < 2) return;
    WeightedGraph ex = small_expander(static_cast<int>(parents.size()),
                                      p.expander_gap_threshold, seed);
    std::vector<std::pair<Index, Index>> extra;
    for (const auto& e : ex.edges())
      for (std::size_t pos = 0; pos < subtrees[e.u].size(); ++pos)
        extra.push_back({subtrees[e.u][pos], subtrees[e.v][pos]});
    t.graph = overlay_edges(t.graph, extra);
  };
  connect(t.pgl, t.pgl_subtree, mix_seed(p.seed, 1000 + t.island));
  if (t.island > 1) connect(t.pbl, t.pbl_subtree, mix_seed(p.seed, 2000 + t.island));
  return t;
}

LabeledFamily build_family(const FamilyParams& p, bool primed) {
  p.validate();
  std::vector<TreeSkeleton> skels;
  skels.reserve(p.n);
  for (int i = 1; i <= p.n; ++i) skels.push_back(build_tree_bs(i, p));

  // Coordinate-expander sizes: s_i = prod_{j > i} |BL_j|.
  std::vector<long> s(p.n + 1, 1);
  for (int i = p.n - 1; i >= 1; --i) s[i] = s[i + 1] * static_cast<long>(skels[i].bl.size());

  LabeledFamily fam;
  fam.n = p.n;
  fam.primed = primed;
  std::vector<WeightedGraph> blocks;
  std::vector<long> offset(p.n + 1, 0);
  std::vector<std::vector<Index>> r_idx(p.n), bad_idx(p.n), good_idx(p.n), gl_idx(p.n),
      bl_idx(p.n), gmp_idx(p.n), nice_idx(p.n);
  long total = 0;

  for (int i = 1; i <= p.n; ++i) {
    IslandTree tree = build_W(stretch_family_tree(skels[i - 1], p, primed), p);
    const long sh = s[i];
    WeightedGraph u_i;
    if (sh == 1) {
      u_i = tree.graph;
    } else {
      WeightedGraph h = small_expander(static_cast<int>(sh), p.expander_gap_threshold,
                                       mix_seed(p.seed, 3000 + i));
      u_i = cartesian_product(tree.graph, h);
    }
    offset[i - 1] = total;
    total += u_i.num_vertices();
    if (total > p.vertex_budget)
      throw std::runtime_error("build_family: size budget exceeded: computed >= " +
                               std::to_string(total) + " vertices");
    auto lift = [&](const std::vector<Index>& src, std::vector<Index>& dst) {
      dst.clear();
      for (Index w : src)
        for (long h = 0; h < sh; ++h) dst.push_back(static_cast<Index>(offset[i - 1] + w * sh + h));
    };
    lift({tree.root}, r_idx[i - 1]);
    lift(tree.bl, bad_idx[i - 1]);
    lift(tree.gl, good_idx[i - 1]);
    lift(tree.gl, gl_idx[i - 1]);
    lift(tree.bl, bl_idx[i - 1]);
    lift(tree.gmp, gmp_idx[i - 1]);
    if (i >= 2) lift(tree.gmp, nice_idx[i - 1]);
    fam.o.push_back(static_cast<Index>(offset[i - 1] + tree.root * sh));
    fam.h_size.push_back(sh);
    blocks.push_back(std::move(u_i));
  }

  WeightedGraph g = blocks[0];
  for (int i = 2; i <= p.n; ++i) g = disjoint_union(g, blocks[i - 1]);

  // Stitch Bad_{i+1} onto R_i, bijection fixed by label order.
  std::vector<std::pair<Index, Index>> pairs;
  for (int i = 1; i < p.n; ++i) {
    std::vector<Index> a = r_idx[i - 1], b = bad_idx[i];
    if (a.size() != b.size())
      throw std::runtime_error("build_family: |Bad_{i+1}| != |R_i| at island " + std::to_string(i));
    auto by_label = [&](Index x, Index y) { return g.label(x) < g.label(y); };
    std::sort(a.begin(), a.end(), by_label);
    std::sort(b.begin(), b.end(), by_label);
    for (std::size_t k = 0; k < a.size(); ++k) pairs.push_back({a[k], b[k]});
  }
  auto ident = identify_vertices_with_map(g, pairs);
  g = std::move(ident.graph);
  auto remap_all = [&](std::vector<Index>& v) {
    for (Index& x : v) x = ident.remap[x];
  };
  for (int i = 0; i < p.n; ++i) {
    remap_all(r_idx[i]);
    remap_all(bad_idx[i]);
    remap_all(good_idx[i]);
    remap_all(gl_idx[i]);
    remap_all(bl_idx[i]);
    remap_all(gmp_idx[i]);
    remap_all(nice_idx[i]);
    fam.o[i] = ident.remap[fam.o[i]];
  }
  nice_idx[0] = r_idx[0];  // Nice_1 = R_1

  // Overlay expander across all good leaves.
  std::vector<Index> good_all;
  for (int i = 0; i < p.n; ++i)
    good_all.insert(good_all.end(), good_idx[i].begin(), good_idx[i].end());
  std::sort(good_all.begin(), good_all.end());
  if (good_all.size() >= 2) {
    WeightedGraph h = small_expander(static_cast<int>(good_all.size()), p.expander_gap_threshold,
                                     mix_seed(p.seed, 4000));
    std::vector<std::pair<Index, Index>> extra;
    extra.reserve(h.num_edges());
    for (const auto& e : h.edges()) extra.push_back({good_all[e.u], good_all[e.v]});
    g = overlay_edges(g, extra);
  }

  const Index nv = g.num_vertices();
  fam.graph = std::move(g);
  std::vector<Index> nice_all;
  for (int i = 0; i < p.n; ++i) {
    fam.R.emplace_back(r_idx[i], nv);
    fam.Bad.emplace_back(bad_idx[i], nv);
    fam.Good.emplace_back(good_idx[i], nv);
    fam.GL.emplace_back(gl_idx[i], nv);
    fam.BL.emplace_back(bl_idx[i], nv);
    fam.GMP.emplace_back(gmp_idx[i], nv);
    fam.Nice_parts.emplace_back(nice_idx[i], nv);
    nice_all.insert(nice_all.end(), nice_idx[i].begin(), nice_idx[i].end());
  }
  std::sort(nice_all.begin(), nice_all.end());
  nice_all.erase(std::unique(nice_all.begin(), nice_all.end()), nice_all.end());
  fam.nice = VertexSet(nice_all, nv);
  fam.good_union = VertexSet(good_all, nv);
  if (!fam.graph.is_connected()) throw std::runtime_error("build_family: family is disconnected");
  return fam;
}

VertexSet small_component(const LabeledFamily& fam) {
  const Index n = fam.graph.num_vertices();
  const Index start = fam.o.back();
  if (fam.nice.contains(start)) return VertexSet({}, n);
  std::vector<char> seen(n, 0);
  std::vector<Index> stack{start}, members;
  seen[start] = 1;
  while (!stack.empty()) {
    Index v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (const auto& nb : fam.graph.neighbors(v)) {
      if (seen[nb.to] || fam.nice.contains(nb.to)) continue;
      seen[nb.to] = 1;
      stack.push_back(nb.to);
    }
  }
  return VertexSet(members, n);
}

WeightedGraph torus(int side, int dim) {
  if (side < 2 || dim < 1) throw std::invalid_argument("torus: need side >= 2, dim >= 1");
  long n = 1;
  for (int d = 0; d < dim; ++d) n *= side;
  std::vector<Edge> edges;
  for (long v = 0; v < n; ++v) {
    long stride = 1;
    for (int d = 0; d < dim; ++d) {
      long coord = (v / stride) % side;
      long nb = v + ((coord + 1) % side - coord) * stride;
      edges.push_back({static_cast<Index>(v), static_cast<Index>(nb), 1.0});
      stride *= side;
    }
  }
  return WeightedGraph(static_cast<Index>(n), std::move(edges));
}

WeightedGraph hypercube(int dim) {
  if (dim < 1) throw std::invalid_argument("hypercube: dim must be >= 1");
  const Index n = 1 << dim;
  std::vector<Edge> edges;
  for (Index v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b) {
      Index u = v ^ (1 << b);
      if (u > v) edges.push_back({v, u, 1.0});
    }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete_graph: empty");
  std::vector<Edge> edges;
  for (Index u = 0; u < m; ++u)
    for (Index v = u + 1; v < m; ++v) edges.push_back({u, v, 1.0});
  return WeightedGraph(m, std::move(edges));
}

}  // namespace mixkit
