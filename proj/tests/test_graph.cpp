#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "mixkit/graph.hpp"
#include "mixkit/kernel.hpp"
#include "mixkit/random_graphs.hpp"

using namespace mixkit;

namespace {
WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
WeightedGraph cycle4() { return WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }
}  // namespace

TEST_CASE("vertex set validation") {
  CHECK_THROWS(VertexSet({0, 0}, 3));
  CHECK_THROWS(VertexSet({3}, 3));
  VertexSet s({2, 0}, 3);
  CHECK(s.indices() == std::vector<Index>{0, 2});
  CHECK(s.complement(3).indices() == std::vector<Index>{1});
}

TEST_CASE("parallel edges merge and loops count once in strength") {
  WeightedGraph g(2, {{0, 1, 1}, {1, 0, 2}, {0, 0, 3}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edge_weight(0, 1) == doctest::Approx(3.0));
  CHECK(g.strength(0) == doctest::Approx(6.0));
  CHECK(g.strength(1) == doctest::Approx(3.0));
  CHECK(g.total_strength() == doctest::Approx(9.0));
  CHECK(g.degree(0) == 3);  // loop counts twice
}

TEST_CASE("nonpositive conductance rejected") {
  CHECK_THROWS(WeightedGraph(2, {{0, 1, 0.0}}));
  CHECK_THROWS(WeightedGraph(2, {{0, 1, -1.0}}));
}

TEST_CASE("stretch: edge to path, identity case, triangle degrees") {
  WeightedGraph e(2, {{0, 1, 2.5}});
  WeightedGraph p = stretch_edges(e, {{0, 1}}, 3);
  CHECK(p.num_vertices() == 4);
  CHECK(p.num_edges() == 3);
  for (const auto& ed : p.edges()) CHECK(ed.c == doctest::Approx(1.0));
  CHECK(p.label(2) == "(0,1)#1");

  WeightedGraph same = stretch_edges(e, {{0, 1}}, 1);
  CHECK(same.num_vertices() == 2);
  CHECK(same.edge_weight(0, 1) == doctest::Approx(2.5));

  WeightedGraph t = stretch_edges(triangle(), {{0, 1}}, 2);
  CHECK(t.num_vertices() == 4);
  for (Index v = 0; v < 4; ++v) CHECK(t.degree(v) == 2);

  CHECK_THROWS(stretch_edges(triangle(), {{0, 1}}, 0));
  WeightedGraph two(3, {{0, 1, 1}});
  CHECK_THROWS(stretch_edges(two, {{0, 2}}, 2));
}

TEST_CASE("perturb weights") {
  WeightedGraph c = cycle4();
  WeightedGraph same = perturb_weights(c, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(same.edge_weight(0, 1) == doctest::Approx(1.0));
  WeightedGraph p = perturb_weights(c, {{0, 1, 2.0}});
  Distribution pi = stationary(p);
  CHECK(pi[0] == doctest::Approx(0.3));
  CHECK(pi[1] == doctest::Approx(0.3));
  CHECK(pi[2] == doctest::Approx(0.2));
  CHECK_THROWS(perturb_weights(c, {{0, 2, 2.0}}));
  CHECK_THROWS(perturb_weights(c, {{0, 1, 0.0}}));
}

TEST_CASE("cartesian product") {
  WeightedGraph k2(2, {{0, 1, 1}});
  WeightedGraph sq = cartesian_product(k2, k2);
  CHECK(sq.num_vertices() == 4);
  CHECK(sq.num_edges() == 4);
  for (Index v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);

  WeightedGraph p3(3, {{0, 1, 1}, {1, 2, 1}});
  WeightedGraph ladder = cartesian_product(p3, k2);
  CHECK(ladder.num_vertices() == 6);
  CHECK(ladder.num_edges() == 7);

  WeightedGraph one(1, {});
  WeightedGraph same = cartesian_product(p3, one);
  CHECK(same.num_vertices() == 3);
  CHECK(same.num_edges() == 2);

  // degree law on a random pair
  WeightedGraph a = random_connected_graph(5, 3, 11);
  WeightedGraph b = random_connected_graph(4, 2, 12);
  WeightedGraph prod = cartesian_product(a, b);
  for (Index u = 0; u < 5; ++u)
    for (Index h = 0; h < 4; ++h)
      CHECK(prod.degree(u * 4 + h) == a.degree(u) + b.degree(h));
}

TEST_CASE("identify vertices") {
  WeightedGraph two(4, {{0, 1, 1}, {2, 3, 1}});
  WeightedGraph path = identify_vertices(two, {{1, 2}});
  CHECK(path.num_vertices() == 3);
  CHECK(path.num_edges() == 2);
  CHECK(path.is_connected());

  WeightedGraph tri2(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  WeightedGraph bowtie = identify_vertices(tri2, {{2, 3}});
  CHECK(bowtie.num_vertices() == 5);
  CHECK(bowtie.num_edges() == 6);

  CHECK_THROWS(identify_vertices(two, {{1, 1}}));
  CHECK_THROWS(identify_vertices(two, {{0, 2}, {1, 2}}));
}

TEST_CASE("contract set conserves total strength") {
  WeightedGraph t = triangle();
  WeightedGraph c = contract_set(t, VertexSet({0, 1}, 3));
  CHECK(c.num_vertices() == 2);
  CHECK(c.total_strength() == doctest::Approx(6.0));
  CHECK(c.edge_weight(0, 1) == doctest::Approx(2.0));  // the two boundary edges merge
  CHECK(c.loop_weight(0) == doctest::Approx(2.0));

  WeightedGraph same = contract_set(t, VertexSet({1}, 3));
  CHECK(same.num_vertices() == 3);
  CHECK(same.num_edges() == 3);

  for (unsigned long long seed : {1ull, 2ull, 3ull}) {
    WeightedGraph g = random_connected_graph(10, 6, seed, {.weight_lo = 0.5, .weight_hi = 2.0});
    WeightedGraph cc = contract_set(g, VertexSet({0, 3, 5}, 10));
    CHECK(cc.total_strength() == doctest::Approx(g.total_strength()).epsilon(1e-12));
  }
  CHECK_THROWS(contract_set(t, VertexSet({}, 3)));
}

TEST_CASE("contract set conserves strength exactly in rational arithmetic") {
  using Rational = boost::multiprecision::cpp_rational;
  using RGraph = WeightedGraphT<Rational>;
  RGraph g(5, {{0, 1, Rational(1, 3)},
               {1, 2, Rational(2, 7)},
               {2, 3, Rational(5, 11)},
               {3, 4, Rational(1, 13)},
               {4, 0, Rational(3, 5)},
               {1, 3, Rational(9, 2)}});
  RGraph c = contract_set(g, VertexSet({1, 2, 3}, 5));
  CHECK(c.total_strength() == g.total_strength());  // exact equality
  RGraph s = stretch_edges(g, {{0, 1}}, 1);
  CHECK(s.total_strength() == g.total_strength());
}

TEST_CASE("overlay edges") {
  WeightedGraph c = cycle4();
  WeightedGraph same = overlay_edges(c, {});
  CHECK(same.num_edges() == 4);
  WeightedGraph chord = overlay_edges(c, {{0, 2}});
  CHECK(chord.num_edges() == 5);
  WeightedGraph loop = overlay_edges(c, {{1, 1}});
  CHECK(loop.loop_weight(1) == doctest::Approx(1.0));
  CHECK_THROWS(overlay_edges(c, {{0, 7}}));
  // parallel overlay merges
  WeightedGraph dup = overlay_edges(c, {{0, 1}});
  CHECK(dup.num_edges() == 4);
  CHECK(dup.edge_weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("stretch internal chains are reported in order") {
  WeightedGraph e(2, {{0, 1, 1}});
  auto r = stretch_edges_with_paths(e, {{{0, 1, 4}}});
  const auto& chain = r.chains.at({0, 1});
  CHECK(chain.size() == 3);
  CHECK(r.graph.has_edge(0, chain[0]));
  CHECK(r.graph.has_edge(chain[0], chain[1]));
  CHECK(r.graph.has_edge(chain[2], 1));
}
