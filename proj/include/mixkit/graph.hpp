#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mixkit {

using Index = int;

template <typename Scalar>
struct EdgeT {
  Index u = 0, v = 0;
  Scalar c{};
};

// Sorted, duplicate-free list of vertex indices into a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<Index> idx, Index n) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] < 0 || idx_[k] >= n) throw std::invalid_argument("VertexSet: index out of range");
      if (k > 0 && idx_[k] == idx_[k - 1]) throw std::invalid_argument("VertexSet: duplicate index");
    }
  }
  static VertexSet single(Index v, Index n) { return VertexSet({v}, n); }

  const std::vector<Index>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(Index v) const { return std::binary_search(idx_.begin(), idx_.end(), v); }

  VertexSet complement(Index n) const {
    std::vector<char> in(n, 0);
    for (Index v : idx_) in[v] = 1;
    std::vector<Index> out;
    out.reserve(n - idx_.size());
    for (Index v = 0; v < n; ++v)
      if (!in[v]) out.push_back(v);
    VertexSet r;
    r.idx_ = std::move(out);
    return r;
  }

 private:
  std::vector<Index> idx_;
};

// Undirected network with positive edge conductances. One record per
// unordered pair; parallel edges are merged by summing conductances at
// construction. Loops (u == v) are allowed and carry their stored weight
// once in the vertex strength c_v. Immutable after construction.
template <typename Scalar>
class WeightedGraphT {
 public:
  using Edge = EdgeT<Scalar>;

  WeightedGraphT() = default;

  WeightedGraphT(Index n, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (!labels_.empty() && static_cast<Index>(labels_.size()) != n)
      throw std::invalid_argument("graph: label count mismatch");
    for (auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (!(e.c > Scalar(0))) throw std::invalid_argument("graph: conductance must be positive");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (auto& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
        edges_.back().c += e.c;
      else
        edges_.push_back(e);
    }
    build_adjacency();
  }

  Index num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index v) const {
    static const std::string empty;
    return labels_.empty() ? empty : labels_[v];
  }
  std::string label_or_index(Index v) const {
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
  }

  // c_v: total conductance at v, loops counted once.
  Scalar strength(Index v) const { return strength_[v]; }
  // c_V = sum_v c_v.
  Scalar total_strength() const { return total_; }
  Scalar loop_weight(Index v) const { return loop_[v]; }

  // Graph-theoretic degree: incident non-loop edges, loops count twice.
  int degree(Index v) const { return degree_[v]; }
  int max_degree() const { return n_ == 0 ? 0 : *std::max_element(degree_.begin(), degree_.end()); }

  // Neighbors of v excluding loops: (neighbor, conductance) pairs.
  struct Neighbor {
    Index to;
    Scalar c;
  };
  const std::vector<Neighbor>& neighbors(Index v) const { return adj_[v]; }

  bool is_connected() const { return connected_; }

  bool has_edge(Index u, Index v) const { return find_edge(u, v) >= 0; }
  Scalar edge_weight(Index u, Index v) const {
    auto k = find_edge(u, v);
    if (k < 0) throw std::invalid_argument("graph: no such edge");
    return edges_[k].c;
  }

 private:
  long find_edge(Index u, Index v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v, Scalar(1)};
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), probe,
        [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    if (it == edges_.end() || it->u != u || it->v != v) return -1;
    return it - edges_.begin();
  }

  void build_adjacency() {
    strength_.assign(n_, Scalar(0));
    loop_.assign(n_, Scalar(0));
    degree_.assign(n_, 0);
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
      if (e.u == e.v) {
        strength_[e.u] += e.c;
        loop_[e.u] += e.c;
        degree_[e.u] += 2;
      } else {
        strength_[e.u] += e.c;
        strength_[e.v] += e.c;
        degree_[e.u] += 1;
        degree_[e.v] += 1;
        adj_[e.u].push_back({e.v, e.c});
        adj_[e.v].push_back({e.u, e.c});
      }
    }
    total_ = Scalar(0);
    for (Index v = 0; v < n_; ++v) total_ += strength_[v];
    connected_ = check_connected();
  }

  bool check_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    Index count = 1;
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      for (const auto& nb : adj_[v])
        if (!seen[nb.to]) {
          seen[nb.to] = 1;
          ++count;
          stack.push_back(nb.to);
        }
    }
    return count == n_;
  }

  Index n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<Scalar> strength_, loop_;
  std::vector<int> degree_;
  std::vector<std::vector<Neighbor>> adj_;
  Scalar total_{};
  bool connected_ = true;
};

using WeightedGraph = WeightedGraphT<double>;
using Edge = EdgeT<double>;

namespace detail {
inline std::pair<Index, Index> ordered(Index u, Index v) {
  return u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
}
}  // namespace detail

template <typename S>
struct StretchResultT {
  WeightedGraphT<S> graph;
  // Internal vertices per stretched edge, keyed by the canonical (min,max)
  // pair and ordered from the smaller endpoint to the larger.
  std::map<std::pair<Index, Index>, std::vector<Index>> chains;
};

// Replaces each selected edge {u,v} by a path of `factor` unit-conductance
// edges. factor 1 keeps the edge (weight included) untouched. Internal path
// vertices are appended in canonical edge order and labeled "(u,v)#k".
template <typename S>
StretchResultT<S> stretch_edges_with_paths(const WeightedGraphT<S>& g,
                                           const std::vector<std::tuple<Index, Index, int>>& factors) {
  std::map<std::pair<Index, Index>, int> want;
  for (auto [u, v, f] : factors) {
    if (f < 1) throw std::invalid_argument("stretch_edges: factor must be >= 1");
    if (!g.has_edge(u, v)) throw std::invalid_argument("stretch_edges: not an edge");
    auto key = detail::ordered(u, v);
    if (!want.emplace(key, f).second) throw std::invalid_argument("stretch_edges: duplicate edge");
  }
  Index next = g.num_vertices();
  std::vector<EdgeT<S>> edges;
  std::vector<std::string> labels(g.num_vertices());
  for (Index v = 0; v < g.num_vertices(); ++v) labels[v] = g.label(v);
  StretchResultT<S> out;
  for (const auto& e : g.edges()) {
    auto it = want.find({e.u, e.v});
    int f = (it == want.end()) ? 1 : it->second;
    if (f == 1) {
      edges.push_back(e);
      continue;
    }
    std::string lu = g.label_or_index(e.u), lv = g.label_or_index(e.v);
    std::vector<Index>& chain = out.chains[{e.u, e.v}];
    Index prev = e.u;
    for (int k = 1; k < f; ++k) {
      labels.push_back("(" + lu + "," + lv + ")#" + std::to_string(k));
      edges.push_back({prev, next, S(1)});
      chain.push_back(next);
      prev = next++;
    }
    edges.push_back({prev, e.v, S(1)});
  }
  out.graph = WeightedGraphT<S>(next, std::move(edges), std::move(labels));
  return out;
}

template <typename S>
WeightedGraphT<S> stretch_edges(const WeightedGraphT<S>& g,
                                const std::vector<std::tuple<Index, Index, int>>& factors) {
  return stretch_edges_with_paths(g, factors).graph;
}

template <typename S>
WeightedGraphT<S> stretch_edges(const WeightedGraphT<S>& g,
                                const std::vector<std::pair<Index, Index>>& which, int factor) {
  std::vector<std::tuple<Index, Index, int>> f;
  f.reserve(which.size());
  for (auto [u, v] : which) f.emplace_back(u, v, factor);
  return stretch_edges(g, f);
}

// Stretch every edge by the same factor.
template <typename S>
WeightedGraphT<S> stretch_all_edges(const WeightedGraphT<S>& g, int factor) {
  std::vector<std::tuple<Index, Index, int>> f;
  f.reserve(g.num_edges());
  for (const auto& e : g.edges()) f.emplace_back(e.u, e.v, factor);
  return stretch_edges(g, f);
}

// Multiplies the listed conductances; structure unchanged.
template <typename S>
WeightedGraphT<S> perturb_weights(const WeightedGraphT<S>& g,
                                  const std::vector<std::tuple<Index, Index, S>>& factors) {
  std::map<std::pair<Index, Index>, S> want;
  for (auto& [u, v, f] : factors) {
    if (!(f > S(0))) throw std::invalid_argument("perturb_weights: factor must be positive");
    if (!g.has_edge(u, v)) throw std::invalid_argument("perturb_weights: not an edge");
    want[detail::ordered(u, v)] = f;
  }
  std::vector<EdgeT<S>> edges = g.edges();
  for (auto& e : edges) {
    auto it = want.find({e.u, e.v});
    if (it != want.end()) e.c *= it->second;
  }
  return WeightedGraphT<S>(g.num_vertices(), std::move(edges), g.labels());
}

// V(G) x V(H); an edge moves exactly one coordinate and inherits that
// factor's conductance. Vertex (u,h) gets index u*|V(H)|+h.
template <typename S>
WeightedGraphT<S> cartesian_product(const WeightedGraphT<S>& g, const WeightedGraphT<S>& h) {
  if (g.num_vertices() == 0 || h.num_vertices() == 0)
    throw std::invalid_argument("cartesian_product: empty factor");
  const Index ng = g.num_vertices(), nh = h.num_vertices();
  auto id = [nh](Index u, Index x) { return u * nh + x; };
  std::vector<EdgeT<S>> edges;
  edges.reserve(g.num_edges() * nh + h.num_edges() * ng);
  for (const auto& e : g.edges())
    for (Index x = 0; x < nh; ++x) edges.push_back({id(e.u, x), id(e.v, x), e.c});
  for (Index u = 0; u < ng; ++u)
    for (const auto& e : h.edges()) edges.push_back({id(u, e.u), id(u, e.v), e.c});
  std::vector<std::string> labels(static_cast<std::size_t>(ng) * nh);
  for (Index u = 0; u < ng; ++u)
    for (Index x = 0; x < nh; ++x)
      labels[id(u, x)] = "(" + g.label_or_index(u) + "," + h.label_or_index(x) + ")";
  return WeightedGraphT<S>(ng * nh, std::move(edges), std::move(labels));
}

template <typename S>
struct IdentifyResultT {
  WeightedGraphT<S> graph;
  std::vector<Index> remap;  // old index -> new index
};

// Merges each pair (a, phi(a)) into one vertex carrying the union of both
// incident edge sets. The two sides must be disjoint and duplicate-free.
// An edge joining a merged pair becomes a loop of twice its weight, which
// keeps the total strength c_V unchanged.
template <typename S>
IdentifyResultT<S> identify_vertices_with_map(const WeightedGraphT<S>& g,
                                              const std::vector<std::pair<Index, Index>>& pairs) {
  const Index n = g.num_vertices();
  std::vector<Index> target(n, -1);
  std::vector<char> is_a(n, 0), is_b(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("identify_vertices: index out of range");
    if (a == b) throw std::invalid_argument("identify_vertices: pair within one set");
    if (is_a[a] || is_b[a] || is_a[b] || is_b[b])
      throw std::invalid_argument("identify_vertices: sets overlap or not a bijection");
    is_a[a] = 1;
    is_b[b] = 1;
    target[b] = a;
  }
  std::vector<Index> remap(n, -1);
  Index next = 0;
  for (Index v = 0; v < n; ++v)
    if (!is_b[v]) remap[v] = next++;
  for (Index v = 0; v < n; ++v)
    if (is_b[v]) remap[v] = remap[target[v]];
  std::vector<EdgeT<S>> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    Index u = remap[e.u], v = remap[e.v];
    if (u == v && e.u != e.v)
      edges.push_back({u, v, e.c * S(2)});
    else
      edges.push_back({u, v, e.c});
  }
  std::vector<std::string> labels(next);
  for (Index v = 0; v < n; ++v) {
    if (is_b[v]) continue;
    labels[remap[v]] = g.label(v);
  }
  for (Index v = 0; v < n; ++v)
    if (is_b[v] && labels[remap[v]].empty()) labels[remap[v]] = g.label(v);
  return {WeightedGraphT<S>(next, std::move(edges), std::move(labels)), std::move(remap)};
}

template <typename S>
WeightedGraphT<S> identify_vertices(const WeightedGraphT<S>& g,
                                    const std::vector<std::pair<Index, Index>>& pairs) {
  return identify_vertices_with_map(g, pairs).graph;
}

// Collapses D to a single vertex x. Boundary edges reattach to x; each edge
// internal to D becomes a loop at x of twice its weight, so c_V is conserved.
// x sits at the compressed position of min(D).
template <typename S>
WeightedGraphT<S> contract_set(const WeightedGraphT<S>& g, const VertexSet& d) {
  if (d.empty()) throw std::invalid_argument("contract_set: empty set");
  const Index n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (Index v : d.indices()) in[v] = 1;
  const Index anchor = d.indices().front();
  std::vector<Index> remap(n, -1);
  Index next = 0;
  for (Index v = 0; v < n; ++v) {
    if (in[v] && v != anchor) continue;
    remap[v] = next++;
  }
  for (Index v : d.indices()) remap[v] = remap[anchor];
  std::vector<EdgeT<S>> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    bool internal = in[e.u] && in[e.v];
    if (internal && e.u != e.v)
      edges.push_back({remap[e.u], remap[e.v], e.c * S(2)});
    else
      edges.push_back({remap[e.u], remap[e.v], e.c});
  }
  std::vector<std::string> labels(next);
  for (Index v = 0; v < n; ++v)
    if (remap[v] >= 0 && (!in[v] || v == anchor)) labels[remap[v]] = g.label(v);
  return WeightedGraphT<S>(next, std::move(edges), std::move(labels));
}

// Adds unit-conductance edges between existing vertices; parallels merge by
// conductance addition.
template <typename S>
WeightedGraphT<S> overlay_edges(const WeightedGraphT<S>& g,
                                const std::vector<std::pair<Index, Index>>& extra) {
  std::vector<EdgeT<S>> edges = g.edges();
  for (auto [u, v] : extra) {
    if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("overlay_edges: endpoint out of range");
    edges.push_back({u, v, S(1)});
  }
  return WeightedGraphT<S>(g.num_vertices(), std::move(edges), g.labels());
}

// Disjoint union; the second block's indices are shifted by |V(G)|.
template <typename S>
WeightedGraphT<S> disjoint_union(const WeightedGraphT<S>& g, const WeightedGraphT<S>& h) {
  const Index ng = g.num_vertices();
  std::vector<EdgeT<S>> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + ng, e.v + ng, e.c});
  std::vector<std::string> labels(ng + h.num_vertices());
  for (Index v = 0; v < ng; ++v) labels[v] = g.label(v);
  for (Index v = 0; v < h.num_vertices(); ++v) labels[ng + v] = h.label(v);
  return WeightedGraphT<S>(ng + h.num_vertices(), std::move(edges), std::move(labels));
}

}  // namespace mixkit
