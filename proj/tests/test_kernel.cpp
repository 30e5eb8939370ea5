#include <doctest.h>

#include "mixkit/kernel.hpp"
#include "mixkit/random_graphs.hpp"

using namespace mixkit;

TEST_CASE("lazy kernel rows: triangle, path, star") {
  WeightedGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  TransitionKernel k = lazy_kernel(k3);
  CHECK(k.P.coeff(0, 0) == doctest::Approx(0.5));
  CHECK(k.P.coeff(0, 1) == doctest::Approx(0.25));
  CHECK(k.P.coeff(0, 2) == doctest::Approx(0.25));

  WeightedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  TransitionKernel kp = lazy_kernel(path);
  CHECK(kp.P.coeff(1, 0) == doctest::Approx(0.25));
  CHECK(kp.P.coeff(1, 1) == doctest::Approx(0.5));
  CHECK(kp.P.coeff(1, 2) == doctest::Approx(0.25));

  WeightedGraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  TransitionKernel ks = lazy_kernel(star);
  CHECK(ks.P.coeff(1, 1) == doctest::Approx(0.5));
  CHECK(ks.P.coeff(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("lazy kernel rejects disconnected graphs") {
  WeightedGraph g(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_FALSE(g.is_connected());
  CHECK_THROWS_WITH_AS(lazy_kernel(g), "lazy_kernel: disconnected", std::invalid_argument);
}

TEST_CASE("stationary law: cycle uniform, weighted path, invariance") {
  WeightedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Distribution pi = stationary(c4);
  for (Index v = 0; v < 4; ++v) CHECK(pi[v] == doctest::Approx(0.25));

  WeightedGraph wp(3, {{0, 1, 5}, {1, 2, 1}});
  Distribution pw = stationary(wp);
  CHECK(pw[0] == doctest::Approx(5.0 / 12.0));
  CHECK(pw[1] == doctest::Approx(6.0 / 12.0));
  CHECK(pw[2] == doctest::Approx(1.0 / 12.0));

  for (unsigned long long seed : {4ull, 5ull, 6ull}) {
    WeightedGraph g = random_connected_graph(12, 8, seed, {.weight_lo = 0.25, .weight_hi = 4.0});
    TransitionKernel k = lazy_kernel(g);
    Eigen::VectorXd piP = k.P.transpose() * k.pi;
    CHECK((piP - k.pi).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(reversibility_defect(k) <= 1e-12);
    Eigen::VectorXd rowsum = k.P * Eigen::VectorXd::Ones(k.size());
    CHECK((rowsum.array() - 1.0).abs().maxCoeff() <= 1e-12);
    for (Eigen::Index v = 0; v < k.size(); ++v) CHECK(k.P.coeff(v, v) >= 0.5 - 1e-12);
  }
}

TEST_CASE("restricted kernel is substochastic") {
  WeightedGraph g = random_connected_graph(8, 5, 9);
  TransitionKernel k = lazy_kernel(g);
  RestrictedKernel r = restrict_kernel(k, VertexSet({0, 1, 2}, 8));
  Eigen::VectorXd rowsum = r.P * Eigen::VectorXd::Ones(3);
  CHECK(rowsum.maxCoeff() <= 1.0 + 1e-12);
  CHECK(rowsum.minCoeff() > 0.0);
  CHECK_THROWS(restrict_kernel(k, VertexSet({}, 8)));
}

TEST_CASE("evolve conserves mass and mixes a small expander") {
  WeightedGraph k2(2, {{0, 1, 1}});
  TransitionKernel k = lazy_kernel(k2);
  Distribution d0 = Distribution::point_mass(2, 0);
  CHECK(evolve(k, d0, 0).vec() == d0.vec());
  Distribution d1 = evolve(k, d0, 1);
  CHECK(d1[0] == doctest::Approx(0.5));
  CHECK(d1[1] == doctest::Approx(0.5));

  WeightedGraph g = random_connected_graph(20, 40, 3);
  TransitionKernel kg = lazy_kernel(g);
  Distribution out = evolve(kg, Distribution::point_mass(20, 0), 10000);
  CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(total_variation(out.vec(), kg.pi) <= 1e-6);
}

TEST_CASE("lp distance closed forms") {
  const int n = 8;
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  Eigen::VectorXd point = Eigen::VectorXd::Zero(n);
  point[3] = 1.0;
  CHECK(lp_distance(point, point, pi, 2.0) == 0.0);
  CHECK(lp_distance(point, pi, pi, 1.0) == doctest::Approx(2.0 * (1.0 - 1.0 / n)));
  CHECK(lp_distance(point, pi, pi, kInfinityP) == doctest::Approx(n - 1.0));
  // p=1 is twice total variation
  Eigen::VectorXd other = Eigen::VectorXd::Constant(n, 1.0 / n);
  other[0] += 0.1;
  other[1] -= 0.1;
  CHECK(lp_distance(other, pi, pi, 1.0) ==
        doctest::Approx(2.0 * total_variation(other, pi)));

  Eigen::VectorXd bad_pi = pi;
  bad_pi[2] = 0.0;
  CHECK_THROWS(lp_distance(point, pi, bad_pi, 2.0));
}
