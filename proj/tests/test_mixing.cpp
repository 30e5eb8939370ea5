#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "mixkit/mixing.hpp"
#include "mixkit/random_graphs.hpp"

using namespace mixkit;

namespace {
WeightedGraph cycle(int n) {
  std::vector<Edge> e;
  for (Index v = 0; v < n; ++v) e.push_back({v, (v + 1) % n, 1.0});
  return WeightedGraph(n, std::move(e));
}
WeightedGraph path(int n) {
  std::vector<Edge> e;
  for (Index v = 0; v + 1 < n; ++v) e.push_back({v, v + 1, 1.0});
  return WeightedGraph(n, std::move(e));
}

// dense oracle: first t with max_x ||P^t(x,.) - pi||_{p,pi} <= eps
long dense_tau(const WeightedGraph& g, double p, double eps) {
  TransitionKernel k = lazy_kernel(g);
  const Eigen::Index n = k.size();
  Eigen::MatrixXd pd = Eigen::MatrixXd(k.P);
  Eigen::MatrixXd pt = Eigen::MatrixXd::Identity(n, n);
  for (long t = 0; t < 100000; ++t) {
    double worst = 0.0;
    for (Eigen::Index x = 0; x < n; ++x) {
      Eigen::VectorXd row = pt.row(x).transpose();
      worst = std::max(worst, lp_distance(row, k.pi, k.pi, p));
    }
    if (worst <= eps) return t;
    pt = pt * pd;
  }
  return -1;
}
}  // namespace

TEST_CASE("mixing time closed cases") {
  WeightedGraph k2(2, {{0, 1, 1}});
  CHECK(mixing_time(k2, 1.0, 0.5) == 1);
  // threshold above the initial distance gives tau = 0
  CHECK(mixing_time(k2, 1.0, 10.0) == 0);
}

TEST_CASE("mixing time agrees with the dense oracle") {
  CHECK(mixing_time(cycle(8), kInfinityP, 0.5) == dense_tau(cycle(8), kInfinityP, 0.5));
  for (unsigned long long seed = 0; seed < 4; ++seed) {
    WeightedGraph g = random_connected_graph(12, 6, 700 + seed);
    for (double p : {1.0, 2.0, kInfinityP})
      CHECK(mixing_time(g, p, 0.5) == dense_tau(g, p, 0.5));
  }
}

TEST_CASE("worst-start curves are monotone and ordered in p") {
  for (unsigned long long seed = 0; seed < 5; ++seed) {
    WeightedGraph g = random_connected_graph(14, 8, 800 + seed,
                                             {.weight_lo = 0.5, .weight_hi = 2.0});
    TransitionKernel k = lazy_kernel(g);
    long t1 = mixing_time(k, 1.0, 0.5);
    long t2 = mixing_time(k, 2.0, 0.5);
    long ti = mixing_time(k, kInfinityP, 0.5);
    CHECK(t1 <= t2);
    CHECK(t2 <= ti);
    MixingCurve c2 = mixing_curve(k, 2.0, 1e-3);
    for (std::size_t t = 0; t + 1 < c2.dist.size(); ++t)
      CHECK(c2.dist[t + 1] <= c2.dist[t] + 1e-12);
  }
}

TEST_CASE("mixing time t-cap raises") {
  MixingOptions opts;
  opts.t_cap = 2;
  CHECK_THROWS(mixing_time(cycle(32), kInfinityP, 0.5, opts));
}

TEST_CASE("hit probabilities: gambler's ruin") {
  WeightedGraph p3 = path(3);
  auto h3 = hit_probability(p3, VertexSet({0}, 3), VertexSet({2}, 3));
  CHECK(h3.value[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(h3.value[0] == 1.0);
  CHECK(h3.value[2] == 0.0);

  WeightedGraph p5 = path(5);
  auto h5 = hit_probability(p5, VertexSet({0}, 5), VertexSet({4}, 5));
  for (Index v = 0; v < 5; ++v) CHECK(h5.value[v] == doctest::Approx(1.0 - v / 4.0).epsilon(1e-12));

  CHECK_THROWS(hit_probability(p3, VertexSet({0}, 3), VertexSet({0, 2}, 3)));
}

TEST_CASE("expected hitting times") {
  WeightedGraph k2(2, {{0, 1, 1}});
  auto r = expected_hitting_time(k2, VertexSet({1}, 2));
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.value[1] == 0.0);

  for (unsigned long long seed = 0; seed < 4; ++seed) {
    WeightedGraph g = random_connected_graph(10, 6, 900 + seed);
    auto small = expected_hitting_time(g, VertexSet({0}, 10));
    auto big = expected_hitting_time(g, VertexSet({0, 1, 2}, 10));
    for (Index v = 0; v < 10; ++v) CHECK(big.value[v] <= small.value[v] + 1e-9);
  }
}

TEST_CASE("exit tail: closed forms and dense-oracle comparison") {
  WeightedGraph p3 = path(3);
  auto curve = exit_tail_curve(p3, VertexSet({0}, 3), 0, 12);
  CHECK(curve[0].exact == doctest::Approx(1.0));
  for (long t = 0; t <= 12; ++t) {
    CHECK(curve[t].exact == doctest::Approx(std::pow(0.5, t)).epsilon(1e-12));
    CHECK(curve[t].bound == doctest::Approx(std::exp(-0.5 * t)).epsilon(1e-12));
    CHECK(curve[t].exact <= curve[t].bound + 1e-12);
  }

  WeightedGraph g = random_connected_graph(9, 6, 950);
  VertexSet a({1, 3, 4, 6}, 9);
  TransitionKernel k = lazy_kernel(g);
  RestrictedKernel r = restrict_kernel(k, a);
  Eigen::MatrixXd q = Eigen::MatrixXd(r.P);
  Eigen::MatrixXd qt = Eigen::MatrixXd::Identity(4, 4);
  auto tail = exit_tail_curve(g, a, 3, 20);
  for (long t = 0; t <= 20; ++t) {
    // start 3 sits at position 1 inside {1,3,4,6}
    CHECK(tail[t].exact == doctest::Approx(qt.row(1).sum()).epsilon(1e-10));
    qt = qt * q;
  }
}

TEST_CASE("conditional decomposition dominates the plain distance") {
  WeightedGraph p5 = path(5);
  auto rep = conditional_decomposition_check(p5, 2, 3, VertexSet({4}, 5), 2.0);
  CHECK(rep.prob_event > 0.0);
  CHECK(rep.prob_event < 1.0);
  CHECK(rep.lhs <= rep.rhs + 1e-12);

  // event of probability one: S unreachable within 0 steps from afar
  auto sure = conditional_decomposition_check(p5, 0, 0, VertexSet({4}, 5), 2.0);
  CHECK(sure.prob_event == doctest::Approx(1.0));
  CHECK(sure.lhs == doctest::Approx(sure.rhs).epsilon(1e-12));

  // start inside S: the event is empty
  auto empty_event = conditional_decomposition_check(p5, 4, 2, VertexSet({4}, 5), 1.5);
  CHECK(empty_event.prob_event == 0.0);
  CHECK(empty_event.lhs == doctest::Approx(empty_event.rhs).epsilon(1e-12));

  for (unsigned long long seed = 0; seed < 5; ++seed) {
    WeightedGraph g = random_connected_graph(11, 7, 1000 + seed);
    auto r = conditional_decomposition_check(g, 0, 4, VertexSet({9, 10}, 11), 2.0);
    CHECK(r.lhs <= r.rhs + 1e-12);
  }
}

TEST_CASE("poincare decay") {
  WeightedGraph c6 = cycle(6);
  Distribution pi = stationary(c6);
  auto fixed = poincare_check(c6, pi, 10);
  CHECK(fixed.ok);
  auto point = poincare_check(c6, Distribution::point_mass(6, 0), 100);
  CHECK(point.ok);
  for (unsigned long long seed = 0; seed < 4; ++seed) {
    WeightedGraph g = random_connected_graph(12, 9, 1100 + seed,
                                             {.weight_lo = 0.5, .weight_hi = 2.0});
    CHECK(poincare_check(g, Distribution::point_mass(12, static_cast<Index>(seed % 12)), 60).ok);
  }
}

TEST_CASE("l2/linfty relation") {
  for (unsigned long long seed = 0; seed < 3; ++seed) {
    WeightedGraph g = random_connected_graph(9 + 3 * static_cast<int>(seed), 6, 1200 + seed);
    auto rep = l2_linfty_relation_check(g, 0.5, 12);
    CHECK(rep.ok);
    CHECK(rep.max_identity_gap <= 1e-9);
    CHECK(std::labs(rep.tau_inf - 2 * rep.tau_2) <= 1);
  }
}

TEST_CASE("simulated walks are reproducible and match the solver") {
  WeightedGraph p5 = path(5);
  TransitionKernel k = lazy_kernel(p5);
  auto s1 = simulate_walk(k, 2, 100, 33, {VertexSet({2}, 5), VertexSet({0}, 5)});
  CHECK(s1.first_hit[0] == 0);
  auto s2 = simulate_walk(k, 2, 100, 33, {VertexSet({2}, 5), VertexSet({0}, 5)});
  CHECK(s1.end_vertex == s2.end_vertex);
  CHECK(s1.first_hit == s2.first_hit);

  auto est = estimate_hit_probability(k, 2, VertexSet({0}, 5), VertexSet({4}, 5), 20000, 7);
  double exact = hit_probability(p5, VertexSet({0}, 5), VertexSet({4}, 5)).value[2];
  double se = std::sqrt(exact * (1.0 - exact) / 20000.0);
  CHECK(std::abs(est.p_hat - exact) <= 3.0 * se);
  CHECK(est.wilson_lo <= exact);
  CHECK(exact <= est.wilson_hi);
}
