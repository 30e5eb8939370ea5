#include <doctest.h>

#include <sstream>

#include "mixkit/graph_io.hpp"
#include "mixkit/random_graphs.hpp"

using namespace mixkit;

TEST_CASE("graph round trip is exact") {
  WeightedGraph g = random_connected_graph(15, 10, 42, {.weight_lo = 1.0 / 3.0, .weight_hi = 7.0});
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  WeightedGraph back = read_graph(in);
  REQUIRE(back.num_vertices() == g.num_vertices());
  REQUIRE(back.num_edges() == g.num_edges());
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    CHECK(back.edges()[k].u == g.edges()[k].u);
    CHECK(back.edges()[k].v == g.edges()[k].v);
    CHECK(back.edges()[k].c == g.edges()[k].c);  // bitwise through %.17g
  }
  std::ostringstream again;
  write_graph(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("label sidecar round trip") {
  WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}}, {"root", "", "leaf"});
  std::ostringstream out;
  write_labels(out, g);
  std::istringstream in(out.str());
  auto labels = read_labels(in, 3);
  CHECK(labels[0] == "root");
  CHECK(labels[1].empty());
  CHECK(labels[2] == "leaf");
}

TEST_CASE("content hash tracks the weights") {
  WeightedGraph a(2, {{0, 1, 1.0}});
  WeightedGraph b(2, {{0, 1, 1.0}});
  WeightedGraph c(2, {{0, 1, 2.0}});
  CHECK(graph_content_hash(a) == graph_content_hash(b));
  CHECK(graph_content_hash(a) != graph_content_hash(c));
}
