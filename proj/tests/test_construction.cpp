#include <doctest.h>

#include "mixkit/construction.hpp"
#include "mixkit/electrical.hpp"
#include "mixkit/graph_io.hpp"
#include "mixkit/spectral.hpp"

using namespace mixkit;

TEST_CASE("torus and hypercube generators") {
  WeightedGraph c3 = torus(3, 1);
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.num_edges() == 3);

  WeightedGraph t42 = torus(4, 2);
  CHECK(t42.num_vertices() == 16);
  CHECK(t42.num_edges() == 32);
  CHECK(t42.is_connected());

  WeightedGraph h2 = hypercube(2);
  CHECK(h2.num_vertices() == 4);
  CHECK(h2.num_edges() == 4);
  for (Index v = 0; v < 4; ++v) CHECK(h2.degree(v) == 2);
}

TEST_CASE("random regular expander") {
  WeightedGraph k4 = random_regular_expander(4, 3, 0.0, 5);
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);  // forced K_4
  CHECK(spectral_gap(k4) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS(random_regular_expander(5, 3, 0.0, 1));  // odd stub count
  CHECK_THROWS(random_regular_expander(3, 3, 0.0, 1));

  WeightedGraph a = random_regular_expander(24, 3, 0.02, 17);
  WeightedGraph b = random_regular_expander(24, 3, 0.02, 17);
  CHECK(graph_content_hash(a) == graph_content_hash(b));
  for (Index v = 0; v < 24; ++v) CHECK(a.degree(v) == 3);
  CHECK(spectral_gap(a) >= 0.02);

  WeightedGraph odd = small_expander(9, 0.02, 3);
  CHECK(odd.is_connected());
  CHECK(odd.max_degree() <= 4);
}

TEST_CASE("island tree: middle-point split and g values") {
  FamilyParams p = FamilyParams::scaled_defaults(2);
  TreeSkeleton t = build_tree_bs(2, p);  // fh_depth 4, threshold 1
  CHECK(t.g_value[t.root] == 0);
  CHECK(t.gmp.size() == 11);  // leaves with g <= 1 out of 16
  CHECK(t.bmp.size() == 5);
  CHECK(t.gl.size() == t.gmp.size() << p.extra(2));
  CHECK(t.pgl.size() == t.gl.size() / 2);
  // 5 bad middle points, target 10: one extension level
  CHECK(t.bl.size() == 10);
  CHECK(t.pbl.size() == 5);

  // depth-2 tree with threshold 1: leaf g values 2,0,0,-2
  FamilyParams p1 = FamilyParams::scaled_defaults(3);
  TreeSkeleton t3 = build_tree_bs(3, p1);  // fh_depth 2, threshold 1
  CHECK(t3.gmp.size() == 3);
  CHECK(t3.bmp.size() == 1);

  // threshold at the depth: no bad middle points
  FamilyParams bad = p;
  bad.gmp_threshold = {1, 4};
  CHECK_THROWS_AS(build_tree_bs(2, bad), std::invalid_argument);
}

TEST_CASE("family tree stretching: primed doubles first-half right edges") {
  FamilyParams p = FamilyParams::scaled_defaults(2);
  TreeSkeleton skel = build_tree_bs(2, p);
  IslandTree plain = stretch_family_tree(skel, p, false);
  IslandTree primed = stretch_family_tree(skel, p, true);
  // each of the 2^d - 1 right-child edges gains q extra internal vertices
  long rights = static_cast<long>(skel.fh_right_edges.size());
  CHECK(rights == (1 << p.fh(2)) - 1);
  CHECK(primed.graph.num_vertices() - plain.graph.num_vertices() == rights * p.stretch_q(2));
  CHECK(plain.graph.is_connected());
  CHECK(primed.graph.is_connected());

  // identity stretch: q=1, short=1 reproduces the skeleton
  FamilyParams unit = p;
  unit.q = {1, 1};
  unit.short_stretch = 1;
  IslandTree same = stretch_family_tree(skel, unit, false);
  CHECK(same.graph.num_vertices() == skel.graph.num_vertices());
  CHECK(same.graph.num_edges() == skel.graph.num_edges());
}

TEST_CASE("expander modification raises degrees by the expander degree") {
  FamilyParams p = FamilyParams::scaled_defaults(2);
  TreeSkeleton skel = build_tree_bs(2, p);
  IslandTree tree = stretch_family_tree(skel, p, false);
  int before = tree.graph.max_degree();
  IslandTree w = build_W(tree, p);
  CHECK(w.graph.is_connected());
  CHECK(w.graph.max_degree() <= before + 4);
  // every member of a good-parent subtree gained the parent's expander degree
  WeightedGraph ge_probe = w.graph;
  for (std::size_t k = 0; k < w.pgl_subtree.size(); ++k)
    for (std::size_t pos = 0; pos < w.pgl_subtree[k].size(); ++pos) {
      Index v = w.pgl_subtree[k][pos];
      int gained = ge_probe.degree(v) - tree.graph.degree(v);
      CHECK(gained >= 1);
      CHECK(gained <= 4);
    }
}

TEST_CASE("scaled family builds, stitches, and stays bounded-degree") {
  FamilyParams p = FamilyParams::scaled_defaults(2);
  LabeledFamily fam = build_family(p, false);
  LabeledFamily fam_primed = build_family(p, true);
  CHECK(fam.graph.is_connected());
  CHECK(fam_primed.graph.is_connected());
  CHECK(fam.graph.max_degree() <= 13);
  CHECK(fam_primed.graph.max_degree() == fam.graph.max_degree());

  // |Bad_{i+1}| = |R_i| and the merged sets coincide
  for (int i = 1; i < fam.n; ++i) {
    CHECK(fam.Bad[i].size() == fam.R[i - 1].size());
    CHECK(fam.Bad[i].indices() == fam.R[i - 1].indices());
  }

  // determinism
  LabeledFamily again = build_family(p, false);
  CHECK(graph_content_hash(again.graph) == graph_content_hash(fam.graph));

  // primed and unprimed differ only in stretch-internal vertices
  long expected_extra = 0;
  for (int i = 2; i <= p.n; ++i) {
    long rights = (1L << p.fh(i)) - 1;
    long sh = fam.h_size[i - 1];
    expected_extra += rights * p.stretch_q(i) * sh;
  }
  CHECK(fam_primed.graph.num_vertices() - fam.graph.num_vertices() == expected_extra);

  VertexSet small = small_component(fam_primed);
  CHECK(small.size() > 0);
  CHECK_FALSE(small.contains(fam_primed.nice.indices().front()));
}

TEST_CASE("family budget produces an explicit error") {
  FamilyParams p = FamilyParams::scaled_defaults(2);
  p.vertex_budget = 50;
  CHECK_THROWS_WITH_AS(build_family(p, false),
                       doctest::Contains("size budget exceeded"), std::runtime_error);
}

TEST_CASE("params validation") {
  FamilyParams p = FamilyParams::scaled_defaults(3);
  CHECK_NOTHROW(p.validate());
  FamilyParams bad = p;
  bad.q = {23, 16, 20};
  CHECK_THROWS(bad.validate());
  bad = p;
  bad.q[2] = p.short_stretch;
  CHECK_THROWS(bad.validate());
  bad = p;
  bad.fh_depth[1] = 3;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("primed island tree shifts first-visit mass toward the stretched-away side") {
  // The level measure of the unprimed tree is uniform; doubling the
  // right-child edges drives the walk left, away from the low-g middle
  // points, so the bad-middle-point mass strictly grows.
  FamilyParams p = FamilyParams::scaled_defaults(2);
  TreeSkeleton skel = build_tree_bs(2, p);
  IslandTree plain = stretch_family_tree(skel, p, false);
  IslandTree primed = stretch_family_tree(skel, p, true);
  std::vector<Index> middle = skel.gmp;
  middle.insert(middle.end(), skel.bmp.begin(), skel.bmp.end());
  auto bmp_mass = [&](const IslandTree& t) {
    Distribution m = harmonic_measure(t.graph, t.root,
                                      VertexSet(middle, t.graph.num_vertices()));
    double mass = 0.0;
    for (Index v : skel.bmp) mass += m[v];
    return mass;
  };
  double plain_mass = bmp_mass(plain);
  double primed_mass = bmp_mass(primed);
  CHECK(plain_mass == doctest::Approx(skel.bmp.size() / 16.0).epsilon(1e-9));
  CHECK(primed_mass > plain_mass);
}
